// rota: command-line verification of Rota-Baxter / O-operator identities.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on usage,
// parse or reference errors.

#include "rota/catalog.hpp"
#include "rota/io.hpp"
#include "rota/random.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace rota;
using io::json;

namespace {

struct Options {
    int p_max = kDefaultPMax;
    int arity_max = kDefaultArityMax;
    bool json_report = false;
    std::uint64_t seed = 1;
    int parallel = 1;
    std::string out;

    std::string algebra, rep, op, base, delta, f, g, alpha, beta, prelie, sgla, diff, prelie_inf;
    std::string grid = "-1,0,1";
    std::uint64_t cap = 5'000'000;
    int n_max = 0;
    std::string kind;
    int arity = 1;
    int degree = 0;
    int weight = 2;
};

class Runner {
public:
    explicit Runner(const Options& o) : opt(o) {}

    const Options& opt;
    io::Workspace ws;
    std::vector<Report> reports;

    // ---- entity loading ----

    const io::Workspace::Entity& entity(const std::string& ref, const std::string& kind, const char* flag)
    {
        if (ref.empty())
            throw io::ParseError(std::string("missing required option ") + flag);
        return ws.resolve(ref, kind);
    }

    static std::string where(const io::Workspace::Entity& e) { return e.file + ":/" + e.key; }

    LieAlgebra algebra()
    {
        const auto& e = entity(opt.algebra, "lie_algebra", "--algebra");
        LieAlgebra L = io::parse_lie_algebra(e.body, where(e));
        if (!ws.validated(e, [&] { return check_lie(L).ok(); }))
            throw Error(e.path() + ": not a Lie algebra (run check-lie for a witness)");
        return L;
    }

    io::NamedRep representation(const LieAlgebra& L)
    {
        if (opt.rep.empty() || opt.rep == "adjoint")
            return io::adjoint_named(L);
        const auto& e = entity(opt.rep, "representation", "--rep");
        io::NamedRep R = io::parse_representation(e.body, L, where(e));
        if (!ws.validated(e, [&] { return check_representation(L, R.rep).pass; }))
            throw Error(e.path() + ": not a representation (run check-rep for a witness)");
        return R;
    }

    LinearOperator op(const std::string& ref, const char* flag, const LieAlgebra& L, const io::NamedRep& R)
    {
        const auto& e = entity(ref, "operator", flag);
        return io::parse_operator(e.body, L.dim(), R.space.size(), where(e));
    }

    AltMap alt(const std::string& ref, const char* flag, const LieAlgebra& L, const io::NamedRep& R)
    {
        const auto& e = entity(ref, "alt_map", flag);
        return io::parse_alt_map(e.body, R.space, L.basis, where(e));
    }

    io::NamedHooked hooked(const std::string& ref, const char* flag)
    {
        const auto& e = entity(ref, "hooked_map", flag);
        return io::parse_hooked_map(e.body, where(e));
    }

    SGLA sgla()
    {
        const auto& e = entity(opt.sgla, "sgla", "--sgla");
        SGLA g = io::parse_sgla(e.body, where(e));
        if (!ws.validated(e, [&] { return check_sgla(g).ok(); }))
            throw Error(e.path() + ": not a symmetric graded Lie algebra (run check-sgla for a witness)");
        return g;
    }

    GradedRepresentation graded_rep(const SGLA& g)
    {
        if (opt.rep.empty() || opt.rep == "adjoint")
            return graded_adjoint(g);
        const auto& e = entity(opt.rep, "graded_rep", "--rep");
        GradedRepresentation R = io::parse_graded_rep(e.body, g, where(e));
        if (!ws.validated(e, [&] { return check_graded_rep(g, R).ok(); }))
            throw Error(e.path() + ": not a graded representation (run check-graded-rep for a witness)");
        return R;
    }

    GCochain cochain(const std::string& ref, const char* flag, const SGLA& g, const GradedRepresentation& R)
    {
        if (ref.empty())
            throw io::ParseError(std::string("missing required option ") + flag);
        const std::string file = ref.substr(0, ref.find('#'));
        ws.load(file);
        try {
            const auto& e = ws.resolve(ref, "cochain");
            return io::parse_cochain(e.body, g, R, false, where(e));
        } catch (const io::ParseError&) {
            const auto& e = ws.resolve(ref, "homotopy_operator");
            return io::parse_cochain(e.body, g, R, true, where(e));
        }
    }

    HomotopyOperator homotopy_op(const SGLA& g, const GradedRepresentation& R)
    {
        const auto& e = entity(opt.op, "homotopy_operator", "--op");
        return io::parse_cochain(e.body, g, R, true, where(e));
    }

    // ---- output ----

    void emit(const std::string& kind, const json& body)
    {
        json doc = {{kind, body}};
        emit_document(doc);
    }

    void emit_document(const json& doc)
    {
        if (opt.out.empty()) {
            std::cout << doc.dump(2) << "\n";
            emitted_to_stdout = true;
            return;
        }
        std::ofstream f(opt.out);
        if (!f)
            throw Error(opt.out + ": cannot write");
        f << doc.dump(2) << "\n";
    }

    bool emitted_to_stdout = false;

    static std::string text(const Report& r)
    {
        std::string s = (r.pass ? "PASS " : "FAIL ") + r.check + " (order " + std::to_string(r.order) + ")";
        if (r.witness) {
            s += ": " + r.witness->detail + " at (";
            for (std::size_t i = 0; i < r.witness->args.size(); ++i)
                s += (i ? ", " : "") + std::to_string(r.witness->args[i] + 1);
            s += ") residual [";
            for (std::size_t i = 0; i < r.witness->residual.size(); ++i)
                s += (i ? ", " : "") + to_string(r.witness->residual[i]);
            s += "]";
        }
        return s;
    }

    int finish(const std::string& command)
    {
        bool pass = true;
        for (const auto& r : reports)
            pass = pass && r.pass;
        std::ostream& os = emitted_to_stdout ? std::cerr : std::cout;
        if (opt.json_report) {
            json j;
            if (reports.size() == 1) {
                j = io::to_json(reports.front());
            } else {
                int order = 0;
                json witness = nullptr;
                json checks = json::array();
                for (const auto& r : reports) {
                    order = std::max(order, r.order);
                    checks.push_back(io::to_json(r));
                    if (!r.pass && witness.is_null())
                        witness = checks.back()["witness"];
                }
                j = {{"check", command}, {"pass", pass}, {"order", order}, {"witness", witness}, {"checks", checks}};
            }
            os << j.dump() << "\n";
        } else {
            for (const auto& r : reports)
                os << text(r) << "\n";
        }
        return pass ? 0 : 1;
    }

    // ---- commands ----

    void check_lie_cmd()
    {
        const auto& e = entity(opt.algebra, "lie_algebra", "--algebra");
        LieCheck c = check_lie(io::parse_lie_algebra(e.body, where(e)));
        reports = {c.antisymmetry, c.jacobi};
    }

    void check_rep_cmd()
    {
        LieAlgebra L = algebra();
        if (opt.rep.empty() || opt.rep == "adjoint") {
            reports = {check_representation(L, adjoint(L))};
            return;
        }
        const auto& e = entity(opt.rep, "representation", "--rep");
        reports = {check_representation(L, io::parse_representation(e.body, L, where(e)).rep)};
    }

    static Report defect_report(const AltMap& d, const std::string& name, const std::string& detail)
    {
        if (d.is_zero())
            return Report::ok(name, 2);
        const auto& [t, v] = *d.values().begin();
        return Report::fail(name, 2, {t, v, detail});
    }

    void check_rbo_cmd()
    {
        LieAlgebra L = algebra();
        io::NamedRep R = io::adjoint_named(L);
        LinearOperator P = op(opt.op, "--op", L, R);
        reports = {defect_report(oop_defect(L, R.rep, P), "Rota-Baxter operator",
                                 "[Px,Py] - P([Px,y] + [x,Py]) != 0")};
    }

    void check_oop_cmd()
    {
        LieAlgebra L = algebra();
        io::NamedRep R = representation(L);
        LinearOperator T = op(opt.op, "--op", L, R);
        reports = {defect_report(oop_defect(L, R.rep, T), "O-operator",
                                 "[Tu,Tv] - T(rho(Tu)v - rho(Tv)u) != 0")};
    }

    void bracket_cmd()
    {
        LieAlgebra L = algebra();
        io::NamedRep R = representation(L);
        AltMap b = courant_bracket(alt(opt.f, "--f", L, R), alt(opt.g, "--g", L, R), L, R.rep, opt.arity_max);
        emit("alt_map", io::to_json(b, L.basis));
        reports = {Report::ok("bracket", opt.arity_max)};
    }

    void mc_check_cmd()
    {
        LieAlgebra L = algebra();
        io::NamedRep R = representation(L);
        LinearOperator T = op(opt.op, "--op", L, R);
        AltMap mc = mc_residual(to_alt(T), L, R.rep);
        reports = {defect_report(mc, "Maurer-Cartan equation", "(1/2)[[T,T]] != 0")};
        reports.push_back(Report{"agrees with O-operator defect", mc.is_zero() == oop_defect(L, R.rep, T).is_zero(),
                                 2, std::nullopt});
    }

    void deform_cmd()
    {
        LieAlgebra L = algebra();
        io::NamedRep R = representation(L);
        LinearOperator T = op(opt.base, "--base", L, R);
        LinearOperator Tp = op(opt.delta, "--delta", L, R);
        if (!is_oop(L, R.rep, T))
            throw Error("deform: the base operator is not an O-operator");
        AltMap lhs = d_T(to_alt(T), to_alt(Tp), L, R.rep) + Rational(1, 2) * courant_bracket(to_alt(Tp), to_alt(Tp), L, R.rep);
        reports = {defect_report(lhs, "deformation", "d_T(T') + (1/2)[[T',T']] != 0")};
    }

    void induce_prelie_cmd()
    {
        LieAlgebra L = algebra();
        io::NamedRep R = representation(L);
        LinearOperator T = op(opt.op, "--op", L, R);
        PreLieProduct P = induce_prelie(T, L, R.rep);
        P.basis = R.space;
        emit("prelie", io::to_json(P));
        reports = {Report::ok("induced pre-Lie product", 2)};
    }

    void check_prelie_cmd()
    {
        const auto& e = entity(opt.prelie, "prelie", "--prelie");
        reports = {check_prelie(io::parse_prelie(e.body, where(e)))};
    }

    void mn_bracket_cmd()
    {
        io::NamedHooked a = hooked(opt.alpha, "--alpha");
        io::NamedHooked b = hooked(opt.beta, "--beta");
        if (a.basis != b.basis)
            throw Error("mn-bracket: the two maps live on different spaces");
        if (a.map.arity() + b.map.arity() > opt.arity_max)
            throw Error("mn-bracket: output arity exceeds --arity-max");
        emit("hooked_map", io::to_json(io::NamedHooked{a.basis, mn_bracket(a.map, b.map)}));
        reports = {Report::ok("Matsushima-Nijenhuis bracket", opt.arity_max)};
    }

    void phi_cmd()
    {
        LieAlgebra L = algebra();
        io::NamedRep R = representation(L);
        emit("hooked_map", io::to_json(io::NamedHooked{R.space, phi(alt(opt.f, "--f", L, R), R.rep)}));
        reports = {Report::ok("phi", opt.arity_max)};
    }

    void check_phi_hom_cmd()
    {
        LieAlgebra L = algebra();
        io::NamedRep R = representation(L);
        AltMap f = alt(opt.f, "--f", L, R), g = alt(opt.g, "--g", L, R);
        HookedMap lhs = phi(courant_bracket(f, g, L, R.rep, opt.arity_max), R.rep);
        HookedMap diff = lhs - mn_bracket(phi(f, R.rep), phi(g, R.rep));
        if (diff.is_zero()) {
            reports = {Report::ok("phi homomorphism", f.arity() + g.arity())};
            return;
        }
        const auto& [key, v] = *diff.values().begin();
        Tuple args = key.first;
        args.push_back(key.second);
        reports = {Report::fail("phi homomorphism", f.arity() + g.arity(),
                                {args, v, "Phi([[f,g]]) - [Phi f, Phi g]^C != 0"})};
    }

    std::vector<Rational> grid() const
    {
        std::vector<Rational> out;
        std::stringstream ss(opt.grid);
        std::string item;
        while (std::getline(ss, item, ','))
            out.push_back(parse_rational(item));
        return out;
    }

    void search_rbo_cmd()
    {
        LieAlgebra L = algebra();
        auto found = search_rbo(L, grid(), {opt.cap, static_cast<unsigned>(opt.parallel)});
        json doc = json::object();
        for (std::size_t i = 0; i < found.size(); ++i)
            doc["rbo" + std::to_string(i + 1)] = {{"operator", io::to_json(found[i])}};
        emit_document(doc);
        reports = {Report::ok("search: " + std::to_string(found.size()) + " Rota-Baxter operators", 2)};
    }

    void check_sgla_cmd()
    {
        const auto& e = entity(opt.sgla, "sgla", "--sgla");
        SglaCheck c = check_sgla(io::parse_sgla(e.body, where(e)));
        reports = {c.degree};
        if (c.identities_checked) {
            reports.push_back(c.symmetry);
            reports.push_back(c.leibniz);
        }
    }

    void check_sdgla_cmd()
    {
        SGLA g = sgla();
        const auto& e = entity(opt.diff, "differential", "--diff");
        SdglaCheck c = check_sdgla(g, io::parse_differential(e.body, g, where(e)));
        reports = {c.square_zero, c.compatibility};
    }

    void check_graded_rep_cmd()
    {
        SGLA g = sgla();
        GradedRepresentation R = graded_adjoint(g);
        if (!opt.rep.empty() && opt.rep != "adjoint") {
            const auto& e = entity(opt.rep, "graded_rep", "--rep");
            R = io::parse_graded_rep(e.body, g, where(e));
        }
        GradedRepCheck c = check_graded_rep(g, R);
        reports = {c.degree, c.homomorphism};
    }

    void from_lie_cmd()
    {
        const auto& e = entity(opt.algebra, "lie_algebra", "--algebra");
        SGLA g = from_lie(io::parse_lie_algebra(e.body, where(e)));
        emit("sgla", io::to_json(g));
        SglaCheck c = check_sgla(g);
        reports = {c.degree, c.symmetry, c.leibniz};
    }

    void check_hoop_cmd()
    {
        SGLA g = sgla();
        GradedRepresentation R = graded_rep(g);
        reports = {check_homotopy_oop(homotopy_op(g, R), g, R, opt.p_max)};
    }

    void check_hrbo_cmd()
    {
        SGLA g = sgla();
        GradedRepresentation R = graded_adjoint(g);
        reports = {check_homotopy_rbo(homotopy_op(g, R), g, opt.p_max)};
    }

    void graded_bracket_cmd()
    {
        SGLA g = sgla();
        GradedRepresentation R = graded_rep(g);
        GCochain b = graded_bracket(cochain(opt.f, "--f", g, R), cochain(opt.g, "--g", g, R), g, R, opt.p_max);
        emit("cochain", io::to_json(b, g, R));
        reports = {Report::ok("graded bracket", opt.p_max)};
    }

    void mc_check_homotopy_cmd()
    {
        SGLA g = sgla();
        GradedRepresentation R = graded_rep(g);
        HomotopyOperator T = homotopy_op(g, R);
        GCochain mc = mc_residual_homotopy(T, g, R, opt.p_max);
        reports = {first_nonzero(mc, "Maurer-Cartan equation", opt.p_max, "(1/2)[[T,T]] != 0")};
        reports.push_back(Report{"agrees with generalized Rota-Baxter identities",
                                 mc.is_zero_to(opt.p_max) == is_homotopy_oop(T, g, R, opt.p_max), opt.p_max,
                                 std::nullopt});
    }

    void induce_prelie_inf_cmd()
    {
        SGLA g = sgla();
        GradedRepresentation R = graded_rep(g);
        PreLieInfinity P = induce_prelie_infinity(homotopy_op(g, R), g, R, opt.p_max);
        emit("prelie_inf", io::to_json(P));
        reports = {Report::ok("induced pre-Lie-infinity algebra", opt.p_max)};
    }

    void check_prelie_inf_cmd()
    {
        const auto& e = entity(opt.prelie_inf, "prelie_inf", "--prelie-inf");
        PreLieInfinity P = io::parse_prelie_inf(e.body, where(e));
        const int n_max = opt.n_max > 0 ? opt.n_max : opt.p_max;
        PreLieInfinityCheck c = check_prelie_infinity(P, n_max, opt.seed);
        reports = {c.degree, c.symmetry, c.coherence};
    }

    void check_psi_hom_cmd()
    {
        SGLA g = sgla();
        GradedRepresentation R = graded_rep(g);
        GCochain f = cochain(opt.f, "--f", g, R), h = cochain(opt.g, "--g", g, R);
        GlCochain lhs = psi(graded_bracket(f, h, g, R, opt.p_max), g, R);
        GlCochain rhs = gl_bracket(psi(f, g, R), psi(h, g, R), R.module, opt.p_max);
        lhs -= rhs;
        reports = {Report::ok("psi homomorphism", opt.p_max)};
        for (int p = 0; p <= opt.p_max; ++p)
            if (!lhs.component(p).is_zero()) {
                const auto& [w, M] = *lhs.component(p).values().begin();
                reports = {Report::fail("psi homomorphism", opt.p_max,
                                        {w, M.data(), "Psi([[f,g]]) - [Psi f, Psi g]^c != 0"})};
                break;
            }
    }

    void catalog_cmd()
    {
        json doc = json::object();
        for (const auto& a : catalog::algebras())
            doc[a.name] = {{"lie_algebra", io::to_json(a.algebra)}};
        for (const auto& p : catalog::pairs()) {
            if (p.name.ends_with("/ad"))
                continue;
            doc[p.name] = {{"representation", io::to_json(io::NamedRep{catalog::names(p.rep.space_dim, "v"), p.rep},
                                                           p.algebra)}};
        }
        emit_document(doc);
        reports = {Report::ok("catalog", 0)};
    }

    void sample_cmd()
    {
        Sampler S(opt.seed);
        if (opt.kind == "operator" || opt.kind == "alt_map") {
            LieAlgebra L = algebra();
            io::NamedRep R = representation(L);
            if (opt.kind == "operator")
                emit("operator", io::to_json(S.linear_operator(L.dim(), R.space.size())));
            else
                emit("alt_map", io::to_json(S.alt_map(opt.arity, R.space.size(), L.dim()), L.basis));
        } else if (opt.kind == "cochain" || opt.kind == "homotopy_operator") {
            SGLA g = sgla();
            GradedRepresentation R = graded_rep(g);
            const int degree = opt.kind == "cochain" ? opt.degree : 0;
            json body = io::to_json(S.gcochain(g, R, degree, opt.weight), g, R);
            if (opt.kind == "homotopy_operator")
                body.erase("degree");
            emit(opt.kind, body);
        } else if (opt.kind == "prelie") {
            emit("prelie", io::to_json(S.prelie(static_cast<std::size_t>(opt.arity))));
        } else {
            throw io::ParseError("sample: --kind must be operator, alt_map, cochain, homotopy_operator or prelie");
        }
        reports = {Report::ok("sample", 0)};
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of Rota-Baxter operators, O-operators and their homotopy versions"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--p-max", opt.p_max, "Weight to which homotopy identities are verified")
        ->check(CLI::Range(0, kWeightCap));
    app.add_option("--arity-max", opt.arity_max, "Largest arity a bracket may produce")->check(CLI::Range(0, 12));
    app.add_flag("--json-report", opt.json_report, "Print the report as JSON");
    app.add_option("--seed", opt.seed, "Seed for randomized checks and sampling");
    app.add_option("--parallel", opt.parallel, "Worker threads for searches")->check(CLI::Range(1, 256));

    Runner run(opt);
    struct Command {
        const char* name;
        const char* help;
        void (Runner::*fn)();
        std::vector<std::string> flags;
    };
    const std::vector<Command> commands = {
        {"check-lie", "Antisymmetry and Jacobi identity", &Runner::check_lie_cmd, {"algebra"}},
        {"check-rep", "Representation axiom", &Runner::check_rep_cmd, {"algebra", "rep"}},
        {"check-rbo", "Rota-Baxter identity (weight 0)", &Runner::check_rbo_cmd, {"algebra", "op"}},
        {"check-oop", "O-operator identity", &Runner::check_oop_cmd, {"algebra", "rep", "op"}},
        {"bracket", "Bracket of two alternating maps", &Runner::bracket_cmd, {"algebra", "rep", "f", "g", "out"}},
        {"mc-check", "Maurer-Cartan equation for an operator", &Runner::mc_check_cmd, {"algebra", "rep", "op"}},
        {"deform", "Whether base + delta is again an O-operator", &Runner::deform_cmd,
         {"algebra", "rep", "base", "delta"}},
        {"induce-prelie", "Pre-Lie product u.v = rho(Tu)v", &Runner::induce_prelie_cmd,
         {"algebra", "rep", "op", "out"}},
        {"check-prelie", "Left-symmetry identity", &Runner::check_prelie_cmd, {"prelie"}},
        {"mn-bracket", "Matsushima-Nijenhuis bracket", &Runner::mn_bracket_cmd, {"alpha", "beta", "out"}},
        {"phi", "Phi(f) = rho o f", &Runner::phi_cmd, {"algebra", "rep", "f", "out"}},
        {"check-phi-hom", "Phi([[f,g]]) = [Phi f, Phi g]^C", &Runner::check_phi_hom_cmd, {"algebra", "rep", "f", "g"}},
        {"search-rbo", "Grid search for Rota-Baxter operators", &Runner::search_rbo_cmd,
         {"algebra", "grid", "cap", "out"}},
        {"check-sgla", "Symmetric graded Lie algebra axioms", &Runner::check_sgla_cmd, {"sgla"}},
        {"check-sdgla", "Differential compatibility", &Runner::check_sdgla_cmd, {"sgla", "diff"}},
        {"check-graded-rep", "Graded representation axioms", &Runner::check_graded_rep_cmd, {"sgla", "rep"}},
        {"from-lie", "Place a Lie algebra in degree -1", &Runner::from_lie_cmd, {"algebra", "out"}},
        {"check-hoop", "Generalized Rota-Baxter identities", &Runner::check_hoop_cmd, {"sgla", "rep", "op"}},
        {"check-hrbo", "Homotopy Rota-Baxter operator", &Runner::check_hrbo_cmd, {"sgla", "op"}},
        {"graded-bracket", "Graded bracket of two cochains", &Runner::graded_bracket_cmd,
         {"sgla", "rep", "f", "g", "out"}},
        {"mc-check-homotopy", "Maurer-Cartan equation for a homotopy operator", &Runner::mc_check_homotopy_cmd,
         {"sgla", "rep", "op"}},
        {"induce-prelie-inf", "Pre-Lie-infinity operations from a homotopy operator", &Runner::induce_prelie_inf_cmd,
         {"sgla", "rep", "op", "out"}},
        {"check-prelie-inf", "Pre-Lie-infinity identities", &Runner::check_prelie_inf_cmd, {"prelie-inf", "n-max"}},
        {"check-psi-hom", "Psi([[f,g]]) = [Psi f, Psi g]^c", &Runner::check_psi_hom_cmd, {"sgla", "rep", "f", "g"}},
        {"catalog", "Write the bundled algebras and representations", &Runner::catalog_cmd, {"out"}},
        {"sample", "Random instance from --seed", &Runner::sample_cmd,
         {"kind", "algebra", "rep", "sgla", "arity", "degree", "weight", "out"}},
    };

    std::map<std::string, std::function<void(CLI::App*)>> add_flag = {
        {"algebra", [&](CLI::App* c) { c->add_option("--algebra", opt.algebra, "Lie algebra reference (file[#key])"); }},
        {"rep", [&](CLI::App* c) { c->add_option("--rep", opt.rep, "Representation reference, or 'adjoint'"); }},
        {"op", [&](CLI::App* c) { c->add_option("--op", opt.op, "Operator reference"); }},
        {"base", [&](CLI::App* c) { c->add_option("--base", opt.base, "Base O-operator reference"); }},
        {"delta", [&](CLI::App* c) { c->add_option("--delta", opt.delta, "Perturbation reference"); }},
        {"f", [&](CLI::App* c) { c->add_option("--f", opt.f, "First map reference"); }},
        {"g", [&](CLI::App* c) { c->add_option("--g", opt.g, "Second map reference"); }},
        {"alpha", [&](CLI::App* c) { c->add_option("--alpha", opt.alpha, "First hooked map reference"); }},
        {"beta", [&](CLI::App* c) { c->add_option("--beta", opt.beta, "Second hooked map reference"); }},
        {"prelie", [&](CLI::App* c) { c->add_option("--prelie", opt.prelie, "Pre-Lie product reference"); }},
        {"sgla", [&](CLI::App* c) { c->add_option("--sgla", opt.sgla, "sgLa reference"); }},
        {"diff", [&](CLI::App* c) { c->add_option("--diff", opt.diff, "Differential reference"); }},
        {"prelie-inf", [&](CLI::App* c) { c->add_option("--prelie-inf", opt.prelie_inf, "Pre-Lie-infinity reference"); }},
        {"n-max", [&](CLI::App* c) { c->add_option("--n-max", opt.n_max, "Largest n checked (default: --p-max)"); }},
        {"grid", [&](CLI::App* c) { c->add_option("--grid", opt.grid, "Comma-separated coefficient grid"); }},
        {"cap", [&](CLI::App* c) { c->add_option("--cap", opt.cap, "Largest number of candidates"); }},
        {"out", [&](CLI::App* c) { c->add_option("--out", opt.out, "Write the produced entity here"); }},
        {"kind", [&](CLI::App* c) { c->add_option("--kind", opt.kind, "Entity kind to sample")->required(); }},
        {"arity", [&](CLI::App* c) { c->add_option("--arity", opt.arity, "Arity (or dimension for prelie)"); }},
        {"degree", [&](CLI::App* c) { c->add_option("--degree", opt.degree, "Map degree of a sampled cochain"); }},
        {"weight", [&](CLI::App* c) { c->add_option("--weight", opt.weight, "Largest weight of a sampled cochain"); }},
    };

    std::map<CLI::App*, const Command*> by_app;
    for (const auto& cmd : commands) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        for (const auto& f : cmd.flags)
            add_flag.at(f)(sub);
        by_app[sub] = &cmd;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (const auto& [sub, cmd] : by_app) {
        if (!sub->parsed())
            continue;
        try {
            (run.*(cmd->fn))();
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        return run.finish(cmd->name);
    }
    return 2;
}
