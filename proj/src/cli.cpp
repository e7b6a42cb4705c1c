#include "rbcoalg/cli.hpp"

#include "rbcoalg/binomial.hpp"
#include "rbcoalg/duality.hpp"
#include "rbcoalg/format.hpp"
#include "rbcoalg/hopf.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rbcoalg {

namespace {

using ojson = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(output_path, std::ios::binary);
    if (!f) throw FormatError("cannot write '" + output_path + "'");
    f << text;
}

ojson counterexample_json(const Counterexample& ce) {
    ojson j;
    j["basis"] = ce.basis;
    if (!ce.detail.empty()) j["detail"] = ce.detail;
    const auto entries = [](const std::vector<SparseEntry>& es) {
        ojson arr = ojson::array();
        for (const auto& e : es) {
            ojson item = ojson::array();
            for (int ix : e.index) item.push_back(ix);
            item.push_back(format_rational(e.value));
            arr.push_back(std::move(item));
        }
        return arr;
    };
    j["lhs"] = entries(ce.lhs);
    j["rhs"] = entries(ce.rhs);
    return j;
}

ojson report_json(const Report& r, double ms) {
    ojson j;
    j["check"] = r.check;
    j["pass"] = r.pass;
    j["millis"] = ms;
    if (r.counterexample) j["counterexample"] = counterexample_json(*r.counterexample);
    return j;
}

/// Parses "z<k>" or "sweedler" into a Hopf algebra instance.
HopfAlgebra named_hopf(const std::string& name) {
    if (name == "sweedler") return sweedler_h4();
    if (name.size() > 1 && name[0] == 'z') {
        int n = 0;
        try {
            n = std::stoi(name.substr(1));
        } catch (const std::exception&) {
            throw FormatError("unknown hopf algebra '" + name + "'");
        }
        return group_algebra(n);
    }
    throw FormatError("unknown hopf algebra '" + name + "' (use z<n> or sweedler)");
}

struct GenOptions {
    std::string kind;
    int n = -1;
    std::string q;
    std::string hopf;
    std::string op;
    std::string name;
};

StructureFile run_gen(const GenOptions& g) {
    if (g.kind == "binomial") {
        if (g.n < 0) throw FormatError("gen binomial requires --n >= 0");
        return from_rb_coalgebra(build_binomial(g.n).as_rb());
    }
    if (g.kind == "hopf") {
        if (g.name.empty()) throw FormatError("gen hopf requires --name");
        return from_hopf(named_hopf(g.name));
    }
    if (g.kind == "smash") {
        if (g.hopf.empty()) throw FormatError("gen smash requires --hopf");
        if (g.op != "p1" && g.op != "p2") throw FormatError("gen smash requires --op p1|p2");
        const HopfAlgebra h = named_hopf(g.hopf);
        const Coalgebra c = smash_coalgebra(h);
        const LinearOperator p = g.op == "p1" ? smash_p1(h) : smash_p2(h);
        return from_rb_coalgebra(RBCoalgebra{c, p, Rational(-1)});
    }
    if (g.kind == "qpoly") {
        if (g.q.empty() || g.n < 0) throw FormatError("gen qpoly requires --q and --n");
        const Rational q = parse_rational(g.q);
        StructureFile sf = from_rb_algebra(q_polynomial_truncation(q, g.n));
        std::vector<int> degrees;
        for (int i = 1; i <= g.n; ++i) degrees.push_back(i);
        sf.degrees = degrees;
        return sf;
    }
    if (g.kind == "qdual") {
        if (g.q.empty() || g.n < 0) throw FormatError("gen qdual requires --q and --n");
        const Rational q = parse_rational(g.q);
        return from_rb_coalgebra(graded_dual(q_graded_truncation(q, g.n)));
    }
    throw FormatError("unknown generator '" + g.kind + "'");
}

int run_check(const StructureFile& sf, const std::string& weight_override,
              const std::string& op_name, const std::string& output_path, std::ostream& out) {
    const bool is_rb = sf.kind == Kind::RBCoalgebra || sf.kind == Kind::RBAlgebra;
    if (!is_rb && (!weight_override.empty() || op_name != "P")) {
        throw FormatError("--weight/--op only apply to rb-coalgebra and rb-algebra files");
    }
    std::vector<ojson> checks;
    bool all_pass = true;
    const auto run = [&](auto&& fn) {
        const auto start = Clock::now();
        const Report r = fn();
        all_pass = all_pass && r.pass;
        checks.push_back(report_json(r, millis_since(start)));
    };

    switch (sf.kind) {
        case Kind::Coalgebra: {
            const Coalgebra c = to_coalgebra(sf);
            run([&] { return check_coassociativity(c); });
            if (c.counital()) run([&] { return check_counit(c); });
            break;
        }
        case Kind::Algebra: {
            const Algebra a = to_algebra(sf);
            run([&] { return check_associativity(a); });
            if (a.unital()) run([&] { return check_unit(a); });
            break;
        }
        case Kind::Hopf: {
            const HopfAlgebra h = to_hopf(sf);
            run([&] { return check_hopf_axioms(h); });
            break;
        }
        case Kind::RBCoalgebra: {
            const RBCoalgebra rb = to_rb_coalgebra(sf, op_name);
            const Rational weight =
                weight_override.empty() ? rb.weight : parse_rational(weight_override);
            run([&] { return check_coassociativity(rb.coalgebra); });
            if (rb.coalgebra.counital()) run([&] { return check_counit(rb.coalgebra); });
            run([&] { return check_rb_axiom(rb.coalgebra, rb.op, weight); });
            checks.back()["operator"] = op_name;
            checks.back()["weight"] = format_rational(weight);
            break;
        }
        case Kind::RBAlgebra: {
            const RBAlgebra rb = to_rb_algebra(sf, op_name);
            const Rational weight =
                weight_override.empty() ? rb.weight : parse_rational(weight_override);
            run([&] { return check_associativity(rb.algebra); });
            if (rb.algebra.unital()) run([&] { return check_unit(rb.algebra); });
            run([&] { return check_rb_algebra_axiom(rb.algebra, rb.op, weight); });
            checks.back()["operator"] = op_name;
            checks.back()["weight"] = format_rational(weight);
            break;
        }
    }

    ojson j;
    j["format"] = 1;
    j["command"] = "check";
    j["kind"] = kind_name(sf.kind);
    j["checks"] = checks;
    j["pass"] = all_pass;
    emit(j.dump(2) + "\n", output_path, out);
    return all_pass ? 0 : 1;
}

StructureFile run_transform(const StructureFile& sf, const std::string& verb,
                            const std::string& mu, const std::string& op_name) {
    if (verb == "dualize") {
        return from_rb_algebra(dualize(to_rb_coalgebra(sf, op_name)));
    }
    if (verb == "double-coproduct") {
        return from_rb_coalgebra(double_coproduct(to_rb_coalgebra(sf, op_name)));
    }
    if (verb == "double-product") {
        const RBAlgebra rb = to_rb_algebra(sf, op_name);
        return from_rb_algebra(RBAlgebra{double_product(rb), rb.op, rb.weight});
    }
    if (verb == "complement") {
        return from_rb_coalgebra(complement_operator(to_rb_coalgebra(sf, op_name)));
    }
    if (verb == "rescale") {
        if (mu.empty()) throw FormatError("rescale requires --mu");
        return from_rb_coalgebra(
            rescale_weight(to_rb_coalgebra(sf, op_name), parse_rational(mu)));
    }
    if (verb == "counitize") {
        const RBCoalgebra rb = to_rb_coalgebra(sf, op_name);
        return from_rb_coalgebra(counitize(rb.coalgebra, rb.op));
    }
    if (verb == "quotient-image") {
        return from_rb_coalgebra(quotient_by_image(to_rb_coalgebra(sf, op_name)));
    }
    if (verb == "split") {
        const RBCoalgebra rb = to_rb_coalgebra(sf, op_name);
        const SplitDecomposition split = split_idempotent(rb);
        const RBCoalgebra rebuilt = projector_from_split(rb.coalgebra, split.c1, split.c2);
        StructureFile out = from_rb_coalgebra(rebuilt);
        SubspacesField sub;
        for (int r = 0; r < split.c1.dim(); ++r) sub.c1.push_back(split.c1.basis().row(r));
        for (int r = 0; r < split.c2.dim(); ++r) sub.c2.push_back(split.c2.basis().row(r));
        out.subspaces = sub;
        return out;
    }
    if (verb == "graded-dual") {
        const RBAlgebra rb = to_rb_algebra(sf, op_name);
        if (!sf.degrees) throw FormatError("graded-dual requires a \"degrees\" grading");
        GradedAlgebraTruncation g;
        g.rb = rb;
        g.degree = *sf.degrees;
        g.max_degree = 0;
        for (int d : g.degree) g.max_degree = std::max(g.max_degree, d);
        return from_rb_coalgebra(graded_dual(g));
    }
    throw FormatError("unknown transform '" + verb + "'");
}

int run_lemma(int max_n, const std::string& output_path, std::ostream& out) {
    const auto start = Clock::now();
    const LemmaReport rep = lemma_exhaustive_check(max_n);
    ojson j;
    j["format"] = 1;
    j["command"] = "lemma";
    j["max_n"] = max_n;
    j["tuples"] = rep.tuples;
    j["pass"] = rep.pass;
    j["millis"] = millis_since(start);
    if (rep.counterexample) {
        j["counterexample"] = std::vector<int>(rep.counterexample->begin(),
                                               rep.counterexample->end());
    }
    emit(j.dump(2) + "\n", output_path, out);
    return rep.pass ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact structure-constant computer algebra for coalgebras and Rota-Baxter operators"};
    app.require_subcommand(1);

    GenOptions gen_opts;
    std::string output_path;
    std::string check_file, check_weight, check_op = "P";
    std::string tf_file, tf_verb, tf_mu, tf_op = "P";
    int lemma_max_n = -1;

    CLI::App* gen = app.add_subcommand("gen", "generate a structure file");
    gen->add_option("kind", gen_opts.kind, "binomial | hopf | smash | qpoly | qdual")->required();
    gen->add_option("--n", gen_opts.n, "size parameter");
    gen->add_option("--q", gen_opts.q, "exact rational q, e.g. 2 or 1/3");
    gen->add_option("--hopf", gen_opts.hopf, "hopf instance: z<n> or sweedler");
    gen->add_option("--op", gen_opts.op, "smash operator: p1 or p2");
    gen->add_option("--name", gen_opts.name, "hopf instance: z<n> or sweedler");
    gen->add_option("--output", output_path, "write to file instead of standard output");

    CLI::App* check = app.add_subcommand("check", "verify all laws applicable to a file");
    check->add_option("file", check_file, "structure file")->required();
    check->add_option("--weight", check_weight, "check the Rota-Baxter law at this weight");
    check->add_option("--op", check_op, "operator name (default P)");
    check->add_option("--output", output_path, "write the report to a file");

    CLI::App* tf = app.add_subcommand("transform", "derive a new structure from a file");
    tf->add_option("file", tf_file, "structure file")->required();
    tf->add_option("verb", tf_verb,
                   "dualize | double-coproduct | double-product | complement | rescale | "
                   "counitize | quotient-image | split | graded-dual")
        ->required();
    tf->add_option("--mu", tf_mu, "target weight for rescale");
    tf->add_option("--op", tf_op, "operator name (default P)");
    tf->add_option("--output", output_path, "write to file instead of standard output");

    CLI::App* lemma = app.add_subcommand("lemma", "exhaustive combinatorial identity sweep");
    lemma->add_option("--max-n", lemma_max_n, "largest n to sweep")->required();
    lemma->add_option("--output", output_path, "write the report to a file");

    std::vector<char*> argv;
    std::vector<std::string> storage;
    storage.push_back("rbcoalg");
    for (const auto& a : args) storage.push_back(a);
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) {
            emit(serialize_structure(run_gen(gen_opts)), output_path, out);
            return 0;
        }
        if (check->parsed()) {
            return run_check(parse_structure(read_file(check_file)), check_weight, check_op,
                             output_path, out);
        }
        if (tf->parsed()) {
            const StructureFile sf = parse_structure(read_file(tf_file));
            emit(serialize_structure(run_transform(sf, tf_verb, tf_mu, tf_op)), output_path, out);
            return 0;
        }
        if (lemma->parsed()) {
            if (lemma_max_n < 0) throw FormatError("lemma requires --max-n >= 0");
            return run_lemma(lemma_max_n, output_path, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace rbcoalg
