#include "plsurf/commands.hpp"

#include "plsurf/currents.hpp"
#include "plsurf/decide.hpp"
#include "plsurf/documents.hpp"
#include "plsurf/kapranov.hpp"

#include <random>
#include <sstream>

namespace plsurf {

namespace {

template <class Fn>
CommandResult guarded(Fn&& fn)
{
    CommandResult r;
    try {
        fn(r);
    } catch (const InputError& e) {
        r = {kExitInput, "", std::string("error: ") + e.what() + "\n"};
    } catch (const Json::exception& e) {
        r = {kExitInput, "", std::string("error: ") + e.what() + "\n"};
    } catch (const InternalError& e) {
        r = {kExitInternal, "", std::string("internal error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        r = {kExitInternal, "", std::string("internal error: ") + e.what() + "\n"};
    }
    return r;
}

void require_level(std::size_t level)
{
    if (level < 1)
        throw InputError("--level must be at least 1");
}

bool is_identity(const Matrix& m)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != (r == c ? 1 : 0))
                return false;
    return true;
}

K1Elt random_k1(const QuotientContext& ctx, std::mt19937_64& rng, std::size_t max_weight)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> letter(0, static_cast<int>(ctx.dim()) - 1);
    K1Elt a = ctx.zero();
    for (std::size_t w = 2; w <= max_weight; ++w)
        for (int t = 0; t < 2; ++t) {
            Word x(w - 2);
            for (auto& l : x)
                l = letter(rng);
            int u = letter(rng), v = letter(rng);
            if (u == v)
                continue;
            if (u > v)
                std::swap(u, v);
            a += make_rational(coef(rng)) * ctx.monomial(x, u, v);
        }
    return a;
}

// A random element of the free Lie algebra: generators plus brackets of two.
TruncatedTensor random_lie(const QuotientContext& ctx, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> letter(0, static_cast<int>(ctx.dim()) - 1);
    TruncatedTensor x(ctx.dim(), ctx.level());
    for (std::size_t i = 0; i < ctx.dim(); ++i)
        x.add_term({static_cast<int>(i)}, make_rational(coef(rng)));
    TruncatedTensor a = TruncatedTensor::word(ctx.dim(), ctx.level(), {letter(rng)});
    TruncatedTensor b = TruncatedTensor::word(ctx.dim(), ctx.level(), {letter(rng)});
    return x + make_rational(coef(rng)) * commutator(a, b);
}

} // namespace

CommandResult cmd_path_reduce(const std::string& input)
{
    return guarded([&](CommandResult& r) {
        PLWord w = parse_path_document(parse_json_text(input));
        r.out = dump_document(path_document(reduce(w)));
    });
}

CommandResult cmd_path_sig(const std::string& input, std::size_t level)
{
    return guarded([&](CommandResult& r) {
        require_level(level);
        PLWord w = parse_path_document(parse_json_text(input));
        r.out = dump_document(signature_document(path_signature(w, level)));
    });
}

CommandResult cmd_surface_sig(const std::string& input, std::size_t level, int weight, const Exec& exec)
{
    return guarded([&](CommandResult& r) {
        require_level(level);
        if (weight < 0)
            throw InputError("--weight must be nonnegative");
        KiteWord x = parse_kite_word_document(parse_json_text(input));
        r.out = dump_document(surface_signature_document(surface_signature(x, level, weight, exec)));
    });
}

CommandResult cmd_thin_equiv(const std::string& x, const std::optional<std::string>& y, std::size_t level, int weight,
                             const Exec& exec)
{
    return guarded([&](CommandResult& r) {
        require_level(level);
        if (weight < 0)
            throw InputError("--weight must be nonnegative");
        KiteWord kx = parse_kite_word_document(parse_json_text(x));
        KiteWord ky = y ? parse_kite_word_document(parse_json_text(*y)) : KiteWord(kx.dim);
        if (kx.dim != ky.dim)
            throw InputError("the two kite words have different dimensions");
        DecideOptions opt;
        opt.exec = exec;
        opt.level = level;
        opt.max_weight = weight;
        DecisionReport rep = thin_equiv(kx, ky, opt);
        r.out = dump_document(report_document(rep, kx.dim));
        r.exit_code = rep.verdict == Verdict::equal ? kExitOk : kExitNotEqual;
    });
}

CommandResult cmd_triangulate(const std::string& input, const Exec& exec)
{
    return guarded([&](CommandResult& r) {
        Json doc = parse_json_text(input);
        if (!doc.is_object())
            throw InputError("document must be a JSON object");
        bool kite_input = doc.contains("format") ? doc["format"] == "kite-word" : doc.contains("kites");
        PLSC c;
        if (kite_input) {
            c = compatible_representative(parse_kite_word_document(doc), exec).complex;
        } else {
            TriangulationInput in = parse_triangulation_input(doc);
            c = compatible_triangulation(in.edges, in.polygons, exec);
            c.dim = doc["dim"].get<std::size_t>();
        }
        r.out = dump_document(plsc_document(c, is_compatible(c, exec)));
    });
}

CommandResult cmd_gen_example(const std::string& name)
{
    return guarded([&](CommandResult& r) { r.out = dump_document(kite_word_document(gen_example(name))); });
}

SuiteResult check_dual_basis(std::size_t dim, int max_weight, const Exec& exec)
{
    SuiteResult s{"dual-basis", true, ""};
    std::size_t total = 0;
    for (int w = 3; w <= max_weight; ++w) {
        auto hooks = hook_indices(dim, w);
        std::vector<PolyCurrent> gammas(hooks.size());
        std::vector<PolyForm> forms(hooks.size());
        parallel_for(hooks.size(), exec, [&](std::size_t i) {
            gammas[i] = codifferential(basis_gamma(dim, hooks[i], w));
            forms[i] = exterior_d(basis_omega(dim, hooks[i]));
        });
        Matrix m(hooks.size(), hooks.size());
        parallel_for(hooks.size(), exec, [&](std::size_t p) {
            for (std::size_t q = 0; q < hooks.size(); ++q)
                m.at(p, q) = closed_pairing(gammas[q], forms[p]);
        });
        total += hooks.size();
        if (!is_identity(m)) {
            s.passed = false;
            s.detail = "pairing matrix at weight " + std::to_string(w) + " is not the identity";
            return s;
        }
    }
    s.detail = std::to_string(total) + " basis elements, weights 3.." + std::to_string(max_weight);
    return s;
}

SuiteResult check_curvature_identity(std::size_t dim, std::size_t level)
{
    SuiteResult s{"curvature-identity", true, ""};
    QuotientContext ctx(dim, level);
    for (std::size_t r = 3; r <= level; ++r) {
        CurvatureComponent c = ctx.abelianized_curvature_component(static_cast<int>(r));
        if (!is_identity(c.matrix) || !c.reproduces_forms) {
            s.passed = false;
            s.detail = "weight " + std::to_string(r) + " component differs from the identity";
            return s;
        }
    }
    s.detail = "weights 3.." + std::to_string(level);
    return s;
}

SuiteResult check_peiffer_axioms(std::size_t dim, std::size_t level, std::size_t samples, std::uint64_t seed)
{
    SuiteResult s{"peiffer-axioms", true, ""};
    QuotientContext ctx(dim, level);
    std::mt19937_64 rng(seed);
    const std::size_t top = std::min<std::size_t>(level, 3);
    auto fail = [&](const std::string& what, std::size_t i) {
        s.passed = false;
        s.detail = what + " fails on sample " + std::to_string(i);
        return s;
    };
    for (std::size_t i = 0; i < samples; ++i) {
        TruncatedTensor x = random_lie(ctx, rng);
        K1Elt a = random_k1(ctx, rng, level);
        if (!(ctx.delta(ctx.act(x, a)) == commutator(x, ctx.delta(a))))
            return fail("equivariance", i);
        K1Elt b = random_k1(ctx, rng, top);
        K1Elt c = random_k1(ctx, rng, top);
        a = random_k1(ctx, rng, top);
        if (!(ctx.act(ctx.delta(a), b) + ctx.act(ctx.delta(b), a)).is_zero())
            return fail("Peiffer identity", i);
        if (!(ctx.delta(ctx.bracket(a, b)) == commutator(ctx.delta(a), ctx.delta(b))))
            return fail("bracket compatibility", i);
        K1Elt jac = ctx.bracket(a, ctx.bracket(b, c)) + ctx.bracket(b, ctx.bracket(c, a)) + ctx.bracket(c, ctx.bracket(a, b));
        if (!jac.is_zero())
            return fail("Jacobi identity", i);
    }
    s.detail = std::to_string(samples) + " samples, level " + std::to_string(level);
    return s;
}

CommandResult cmd_selfcheck(const SelfcheckOptions& opt, const Exec& exec)
{
    return guarded([&](CommandResult& r) {
        std::vector<SuiteResult> suites{check_dual_basis(3, opt.dual_weight, exec),
                                        check_curvature_identity(3, opt.level),
                                        check_peiffer_axioms(3, opt.level, opt.samples, opt.seed)};
        std::ostringstream os;
        bool ok = true;
        for (const auto& s : suites) {
            os << (s.passed ? "PASS " : "FAIL ") << s.name << ": " << s.detail << "\n";
            ok = ok && s.passed;
        }
        r.out = os.str();
        r.exit_code = ok ? kExitOk : kExitNotEqual;
    });
}

} // namespace plsurf
