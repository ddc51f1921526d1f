// Command-line driver: witness emission, single measurements,
// verification sweeps, atom/semigroup reports, classification.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcx/atoms.hpp"
#include "pcx/bounds.hpp"
#include "pcx/constructions.hpp"
#include "pcx/convexity.hpp"
#include "pcx/serialize.hpp"
#include "pcx/transform.hpp"
#include "pcx/verify.hpp"
#include "pcx/witnesses.hpp"

namespace {

using namespace pcx;

int write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return 2;
    }
    f << text;
    return 0;
}

WitnessFamily parse_family(const std::string& name) {
    auto f = family_from_string(name);
    if (!f) throw CLI::ValidationError("--family", "unknown family '" + name + "'");
    return *f;
}

Dialect parse_dialect(const std::string& text) {
    Dialect d;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--dialect", "expected orig=new pairs, got '" + item + "'");
        std::string from = item.substr(0, eq), to = item.substr(eq + 1);
        if (to == "-") to.clear();
        d.mapping.emplace_back(from, to);
    }
    return d;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

Measure measure_for(const std::string& op, const std::string& regime) {
    const bool unrestricted = regime == "unrestricted";
    if (op == "reverse") return Measure::Reverse;
    if (op == "star") return Measure::Star;
    if (op == "semigroup") return Measure::Semigroup;
    if (op == "atoms-count" || op == "atoms") return Measure::AtomsCount;
    if (op == "concat" || op == "product")
        return unrestricted ? Measure::ProductU : Measure::ProductR;
    if (op == "union") return unrestricted ? Measure::UnionU : Measure::UnionR;
    if (op == "xor") return unrestricted ? Measure::XorU : Measure::XorR;
    if (op == "diff") return unrestricted ? Measure::DiffU : Measure::DiffR;
    if (op == "intersect") return unrestricted ? Measure::IntersectU : Measure::IntersectR;
    throw CLI::ValidationError("--op", "unknown measure '" + op + "'");
}

Dfa load_dfa(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open file " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_dfa(buf.str());
}

std::string subset_to_string(std::uint64_t s, int n) {
    std::string out = "{";
    bool first = true;
    for (int q = 0; q < n; ++q) {
        if (!(s >> q & 1)) continue;
        if (!first) out += " ";
        out += std::to_string(q);
        first = false;
    }
    return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workbench for witness DFAs of prefix-convex language classes"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "csv";
    std::string out_path;
    int jobs = 0;
    unsigned seed = 0;
    app.add_option("--format", format, "Output format: json, csv, md")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    app.add_option("--out", out_path, "Write output to a file instead of stdout");
    app.add_option("--jobs", jobs, "Worker threads for sweeps (default: logical CPUs)");
    app.add_option("--seed", seed, "Seed for random-word property sampling");

    // witness
    auto* cmd_witness = app.add_subcommand("witness", "Emit a witness DFA as JSON");
    std::string w_family;
    int w_n = 0, w_k = 0;
    std::string w_dialect;
    cmd_witness->add_option("--family", w_family)->required();
    cmd_witness->add_option("--n", w_n)->required();
    cmd_witness->add_option("--k", w_k, "Final-state count (proper family)");
    cmd_witness->add_option("--dialect", w_dialect, "Letter renaming, e.g. a=b,b=a,c=-");

    // measure
    auto* cmd_measure = app.add_subcommand("measure", "Run one measurement");
    std::string m_family, m_op, m_regime = "restricted";
    int m_m = 0, m_n = 0, m_j = 0, m_k = 0;
    std::vector<std::string> m_files;
    cmd_measure->add_option("--family", m_family);
    cmd_measure->add_option("--op", m_op)->required();
    cmd_measure->add_option("--regime", m_regime)->check(CLI::IsMember({"restricted", "unrestricted"}));
    cmd_measure->add_option("--m", m_m);
    cmd_measure->add_option("--n", m_n);
    cmd_measure->add_option("--j", m_j);
    cmd_measure->add_option("--k", m_k);
    cmd_measure->add_option("--file", m_files, "Operand DFA file (repeat for binary ops)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Sweep witness cells against the bounds");
    std::vector<std::string> v_families, v_measures;
    std::string v_m, v_n;
    cmd_verify->add_option("--family", v_families, "Family (repeatable; default all)");
    cmd_verify->add_option("--measure", v_measures, "Measure (repeatable; default all)");
    cmd_verify->add_option("--m", v_m, "Left size or range, e.g. 4 or 3:6");
    cmd_verify->add_option("--n", v_n, "Right size or range, e.g. 4 or 3:6");

    // atoms
    auto* cmd_atoms = app.add_subcommand("atoms", "Per-subset atom complexities of a witness");
    std::string a_family, a_file;
    int a_n = 0, a_k = 0;
    cmd_atoms->add_option("--family", a_family);
    cmd_atoms->add_option("--n", a_n);
    cmd_atoms->add_option("--k", a_k);
    cmd_atoms->add_option("--file", a_file, "Analyze a DFA from a file instead");

    // semigroup
    auto* cmd_semigroup = app.add_subcommand("semigroup", "Transition semigroup size");
    std::string s_family, s_file;
    int s_n = 0, s_k = 0;
    std::uint64_t s_cap = kDefaultSemigroupCap;
    cmd_semigroup->add_option("--family", s_family);
    cmd_semigroup->add_option("--n", s_n);
    cmd_semigroup->add_option("--k", s_k);
    cmd_semigroup->add_option("--cap", s_cap, "Enumeration cap");
    cmd_semigroup->add_option("--file", s_file);

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "Prefix-convexity class of a DFA");
    std::string c_family, c_file;
    int c_n = 0, c_k = 0;
    cmd_classify->add_option("--family", c_family);
    cmd_classify->add_option("--n", c_n);
    cmd_classify->add_option("--k", c_k);
    cmd_classify->add_option("--file", c_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_witness) {
            Dfa d = witness({parse_family(w_family), w_n, w_k});
            if (!w_dialect.empty()) d = apply_dialect(d, parse_dialect(w_dialect));
            return write_out(serialize_dfa(d) + "\n", out_path);
        }

        if (*cmd_measure) {
            std::int64_t measured = 0;
            std::optional<BoundInt> b;
            if (!m_files.empty()) {
                if (m_files.size() > 2) throw std::invalid_argument("at most two --file operands");
                // Measures are language-level; canonicalize file operands
                // (semigroup and atoms are defined on the minimal DFA).
                auto canon = [](const Dfa& d) {
                    return minimize(restrict_alphabet(d, effective_alphabet(d)));
                };
                Dfa lhs = canon(load_dfa(m_files[0]));
                std::optional<Dfa> rhs;
                if (m_files.size() == 2) rhs = canon(load_dfa(m_files[1]));
                measured = measure(lhs, rhs, m_op);
            } else {
                if (m_family.empty())
                    throw std::invalid_argument("measure needs --family or --file operands");
                WitnessFamily fam = parse_family(m_family);
                Measure meas = measure_for(m_op, m_regime);
                auto [lhs, rhs] = theorem_operands(fam, meas, m_m, m_n, m_j, m_k);
                measured = measure(lhs, rhs, meas);
                b = bound({fam, meas, m_m, m_n, m_j, m_k});
            }
            std::ostringstream out;
            out << measured << "\n";
            bool ok = true;
            if (b) {
                ok = (BoundInt)measured == *b;
                out << "bound " << to_string(*b) << " " << (ok ? "pass" : "FAIL") << "\n";
            }
            int rc = write_out(out.str(), out_path);
            return rc != 0 ? rc : (ok ? 0 : 1);
        }

        if (*cmd_verify) {
            VerifyOptions opts;
            for (const auto& f : v_families) opts.families.push_back(parse_family(f));
            for (const auto& m : v_measures) {
                // Accept both plain names (expanded to R and U) and -r/-u forms.
                auto exact = measure_from_string(m);
                if (exact) {
                    opts.measures.push_back(*exact);
                } else {
                    opts.measures.push_back(measure_for(m, "restricted"));
                    Measure u = measure_for(m, "unrestricted");
                    if (u != opts.measures.back()) opts.measures.push_back(u);
                }
            }
            if (!v_m.empty()) opts.m_range = parse_range(v_m);
            if (!v_n.empty()) opts.n_range = parse_range(v_n);
            opts.jobs = jobs;
            opts.seed = seed;
            VerifyReport report = run_sweep(opts);
            std::string text = format == "json"  ? emit_json(report)
                               : format == "md" ? emit_markdown(report)
                                                : emit_csv(report);
            int rc = write_out(text, out_path);
            if (rc != 0) return rc;
            if (report.rows.empty())
                std::cerr << "note: no cells in range (bounds undefined there); nothing verified\n";
            return report.all_passed() ? 0 : 1;
        }

        if (*cmd_atoms) {
            Dfa d;
            std::optional<WitnessFamily> fam;
            if (!a_file.empty()) {
                d = load_dfa(a_file);
                d = minimize(restrict_alphabet(d, effective_alphabet(d)));
            } else {
                fam = parse_family(a_family);
                auto [lhs, rhs] = theorem_operands(*fam, Measure::AtomOfS, 0, a_n, 0, a_k);
                d = lhs;
            }
            AtomReport rep = atoms_report(d);
            std::ostringstream out;
            out << "S,is_atom,complexity";
            bool with_bounds = fam && *fam != WitnessFamily::PrefixFreeSmall;
            if (with_bounds) out << ",bound,pass";
            out << "\n";
            bool ok = true;
            for (const auto& e : rep.entries) {
                out << subset_to_string(e.subset, d.state_count) << ','
                    << (e.is_atom ? "true" : "false") << ',';
                if (e.is_atom) out << e.complexity;
                if (with_bounds) {
                    bool allowed = atom_index_allowed(*fam, a_n, a_k, e.subset);
                    bool row_ok;
                    if (allowed && e.is_atom) {
                        BoundInt b = atom_bound(*fam, a_n, a_k, e.subset);
                        row_ok = (BoundInt)e.complexity == b;
                        out << ',' << to_string(b) << ',' << (row_ok ? "true" : "false");
                    } else {
                        row_ok = allowed == e.is_atom;
                        out << ",," << (row_ok ? "true" : "false");
                    }
                    ok = ok && row_ok;
                }
                out << "\n";
            }
            out << "atoms " << rep.atom_count << "\n";
            int rc = write_out(out.str(), out_path);
            return rc != 0 ? rc : (ok ? 0 : 1);
        }

        if (*cmd_semigroup) {
            Dfa d;
            std::optional<WitnessFamily> fam;
            if (!s_file.empty()) {
                d = load_dfa(s_file);
            } else {
                fam = parse_family(s_family);
                d = theorem_operands(*fam, Measure::Semigroup, 0, s_n, 0, s_k).first;
            }
            std::vector<Transformation> gens;
            for (const auto& [name, t] : letter_transformations(d)) gens.push_back(t);
            auto r = semigroup_size(gens, s_cap);
            std::ostringstream out;
            bool ok = true;
            if (r.overflowed) {
                out << "overflow (cap " << s_cap << ")\n";
            } else {
                out << r.size << "\n";
                if (fam) {
                    auto b = bound({*fam, Measure::Semigroup, 0, s_n, 0, s_k});
                    if (b) {
                        ok = (BoundInt)r.size == *b;
                        out << "bound " << to_string(*b) << " " << (ok ? "pass" : "FAIL") << "\n";
                    }
                }
            }
            int rc = write_out(out.str(), out_path);
            return rc != 0 ? rc : (ok ? 0 : 1);
        }

        if (*cmd_classify) {
            Dfa d;
            if (!c_file.empty()) {
                d = minimize(load_dfa(c_file));
            } else {
                d = minimize(witness({parse_family(c_family), c_n, c_k}));
            }
            LanguageClass cls = classify(d);
            std::ostringstream out;
            out << to_string(cls);
            if (cls == LanguageClass::ProperPrefixConvex) out << " k=" << final_quotients(d);
            out << "\n";
            return write_out(out.str(), out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
