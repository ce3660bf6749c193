// Command-line front end: one verb per pipeline stage.
#include "g2/classify.hpp"
#include "g2/dbkit.hpp"
#include "g2/enumerate.hpp"
#include "g2/factor.hpp"
#include "g2/heights.hpp"
#include "g2/invariants.hpp"
#include "g2/reconstruct.hpp"
#include "g2/sextic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

using namespace g2;
using json = nlohmann::ordered_json;

namespace {

// name<TAB>value lines, or one JSON object with the same fields.
class Output {
public:
    explicit Output(bool as_json) : json_(as_json) {}
    void add(const std::string& name, const std::string& value) { fields_.emplace_back(name, value); }
    void add(const std::string& name, const Rat& value) { add(name, to_string(value)); }
    void flush() const {
        if (json_) {
            json j = json::object();
            for (auto& [k, v] : fields_) j[k] = v;
            std::cout << j.dump() << "\n";
            return;
        }
        for (auto& [k, v] : fields_) std::cout << k << "\t" << v << "\n";
    }

private:
    bool json_;
    std::vector<std::pair<std::string, std::string>> fields_;
};

// Adds fields from f, or name = "undefined (reason)" when f raises a domain error.
void guarded(Output& out, const std::vector<std::string>& names,
             const std::function<std::vector<std::string>()>& f) {
    try {
        auto vals = f();
        for (std::size_t i = 0; i < names.size(); ++i) out.add(names[i], vals[i]);
    } catch (const DomainError& e) {
        for (auto& n : names) out.add(n, std::string("undefined (") + e.what() + ")");
    }
}

std::string key_or_sextic_arity(const std::string& s) {
    std::size_t commas = 0;
    for (char c : s) commas += c == ',';
    return commas == 3 ? "key" : "sextic";
}

std::string aut_text(const AutClass& a) { return a.gap() + " " + a.name; }

void cmd_invariants(const std::string& arg, Output& out) {
    Sextic f = parse_sextic(arg);
    Igusa J = igusa(f);
    if (J.J10 == 0) throw DomainError("J10 = 0: the sextic has a repeated root, not a genus 2 curve");
    out.add("J2", J.J2);
    out.add("J4", J.J4);
    out.add("J6", J.J6);
    out.add("J10", J.J10);
    IgusaClebsch ic = igusa_clebsch(J);
    out.add("I2", ic.I2);
    out.add("I4", ic.I4);
    out.add("I6", ic.I6);
    out.add("I10", ic.I10);
    Clebsch c = clebsch_from_igusa(J);
    out.add("A", c.A);
    out.add("B", c.B);
    out.add("C", c.C);
    out.add("D", c.D);
    guarded(out, {"i1", "i2", "i3"}, [&] {
        AbsoluteI i = absolute_i(J);
        return std::vector<std::string>{to_string(i.i1), to_string(i.i2), to_string(i.i3)};
    });
    guarded(out, {"t1", "t2", "t3"}, [&] {
        TInvariants t = t_invariants(J);
        return std::vector<std::string>{to_string(t.t1), to_string(t.t2), to_string(t.t3)};
    });
    guarded(out, {"j1", "j2", "j3"}, [&] {
        auto j = j_invariants(J);
        return std::vector<std::string>{to_string(j[0]), to_string(j[1]), to_string(j[2])};
    });
    guarded(out, {"a1", "a2"}, [&] {
        auto a = a_invariants(J);
        return std::vector<std::string>{to_string(a[0]), to_string(a[1])};
    });
    out.add("J16", j16(J));
    out.add("J30", j30(J));
    out.add("key", key_from_igusa(J).str());
    if (f.integral()) out.add("J10_factored", factor(Int(J.J10.get_num())).str());
}

void cmd_height(const std::string& arg, long budget, unsigned jobs, Output& out) {
    Sextic f = parse_sextic(arg);
    if (!f.integral()) throw DomainError("normalize first: height needs an integral sextic");
    HeightReport r = minimal_height(f, budget, jobs);
    out.add("naive", to_string(r.naive));
    out.add("stage1", to_string(r.stage1_height));
    out.add("minimal", r.minimal ? to_string(*r.minimal) : "unknown above " + to_string(Int(r.search_bound - 1)));
    out.add("witness", coeff_list(r.witness));
    out.add("search_bound", to_string(r.search_bound));
    out.add("moduli_height", factor(moduli_height(igusa(f))).str());
}

void cmd_minimize(const std::string& arg, bool twists, Output& out) {
    Sextic f = parse_sextic(arg);
    if (!f.integral()) f = content_primitive(f).second;
    DiscriminantReport r = minimal_discriminant(f, twists);
    out.add("form", coeff_list(r.form));
    out.add("J10", r.j10.str());
    out.add("I10", factor(Int(igusa(r.form).J10.get_num()) * pow(Int(2), 20)).str());
    out.add("twist_degree", std::to_string(r.twist_degree));
}

void cmd_reconstruct(const std::string& arg, long bound, Output& out) {
    ModuliKey k = parse_key(arg);
    Reconstruction r = reconstruct(k, bound);
    out.add("key", k.str());
    out.add("aut", aut_text(classify(k)));
    out.add("route", r.route);
    out.add("curve", r.curve ? coeff_list(*r.curve) : "none");
    if (r.parameter) out.add(r.route == "d4" ? "s" : "w", *r.parameter);
    if (r.uv) {
        out.add("u", r.uv->u);
        out.add("v", r.uv->v);
    }
    out.add("field", r.field.kind_name());
    out.add("d", to_string(r.field.d));
    if (k.r == -1 && classify(k).group == Group::C2) out.add("d2", d_squared(k));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genus 2 curves: invariants, classification, heights, reconstruction and databases"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON instead of name<TAB>value lines");

    std::string arg, file, which, out_path;
    long budget = 10, bound = 1000;
    int max_bound = 0, jobs = 0;
    bool twists = false;

    auto* inv = app.add_subcommand("invariants", "All invariant systems of a sextic");
    inv->add_option("sextic", arg, "a0,...,a6 or a polynomial in x")->required();
    auto* mod = app.add_subcommand("modpoint", "Moduli key of a sextic");
    mod->add_option("sextic", arg)->required();
    auto* cls = app.add_subcommand("classify", "Automorphism group of a sextic or key");
    cls->add_option("input", arg, "sextic or key (r,x1,x2,x3)")->required();
    auto* hgt = app.add_subcommand("height", "Naive and minimal height");
    hgt->add_option("sextic", arg)->required();
    hgt->add_option("--budget", budget, "Largest stage-1 height searched exhaustively");
    hgt->add_option("--jobs", jobs, "Worker threads (default: G2_JOBS or 1)");
    auto* mnz = app.add_subcommand("minimize", "Minimal discriminant model");
    mnz->add_option("sextic", arg)->required();
    mnz->add_flag("--twists", twists, "Allow twists for f(x^2) and f(x^3) shapes");
    auto* rec = app.add_subcommand("reconstruct", "Curve equation from a moduli key");
    rec->add_option("key", arg)->required();
    rec->add_option("--bound", bound, "Conic point search bound");
    auto* bld = app.add_subcommand("build", "Build a database");
    bld->add_option("db", which, "L1, L2 or L3")->required()->check(CLI::IsMember({"L1", "L2", "L3"}));
    bld->add_option("--max", max_bound, "Height bound")->required();
    bld->add_option("--out", out_path, "Output JSON-Lines file")->required();
    bld->add_option("--jobs", jobs, "Worker threads (default: G2_JOBS or 1)");
    auto* qry = app.add_subcommand("query", "Look up a key in a database file");
    qry->add_option("file", file)->required();
    qry->add_option("key", arg)->required();
    auto* sts = app.add_subcommand("stats", "Count table of a database file");
    sts->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    Output out(as_json);
    try {
        if (*inv) {
            cmd_invariants(arg, out);
        } else if (*mod) {
            out.add("key", moduli_key(parse_sextic(arg)).str());
        } else if (*cls) {
            ModuliKey k = key_or_sextic_arity(arg) == "key" ? parse_key(arg) : moduli_key(parse_sextic(arg));
            AutClass a = classify(k);
            out.add("aut", aut_text(a));
            out.add("order", std::to_string(a.order));
        } else if (*hgt) {
            cmd_height(arg, budget, enumerate::resolve_jobs(jobs), out);
        } else if (*mnz) {
            cmd_minimize(arg, twists, out);
        } else if (*rec) {
            cmd_reconstruct(arg, bound, out);
        } else if (*bld) {
            db::Database d = db::build(which, max_bound, enumerate::resolve_jobs(jobs));
            db::save(d, out_path);
            out.add("entries", std::to_string(d.entries.size()));
            out.add("out", out_path);
        } else if (*qry) {
            ModuliKey k = parse_key(arg);
            db::Database d = db::load(file);
            auto e = db::query(d, k);
            if (!e) {
                out.add("found", "no");
            } else if (as_json) {
                std::cout << db::entry_json(*e) << "\n";
                return 0;
            } else {
                out.add("found", "yes");
                out.add("key", e->key.str());
                out.add("h", e->h ? std::to_string(*e->h) : "unknown above " + std::to_string(d.bound));
                out.add("mh", e->mh);
                out.add("disc", e->disc.empty() ? "none" : e->disc);
                out.add("aut", aut_text(e->aut));
                out.add("field", e->field.kind_name());
                out.add("d", to_string(e->field.d));
                out.add("twists", std::to_string(e->twists.size()));
            }
        } else if (*sts) {
            std::cout << db::stats_tsv(db::load(file));
            return 0;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    out.flush();
    return 0;
}
