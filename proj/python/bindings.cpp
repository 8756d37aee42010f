#include "ostrowski/json_io.hpp"
#include "ostrowski/literal.hpp"
#include "ostrowski/oracle.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace ostrowski;

namespace {

py::int_ to_pyint(const Int& n) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(n.str().c_str(), nullptr, 10));
}

Int from_pyint(const py::int_& n) {
    return Int(n.attr("__str__")().cast<std::string>());
}

py::object json_to_py(const Json& j) {
    if (j.is_null()) return py::none();
    if (j.is_boolean()) return py::bool_(j.get<bool>());
    if (j.is_string()) return py::str(j.get<std::string>());
    if (j.is_number_integer()) return py::int_(j.get<long long>());
    if (j.is_number_float()) return py::float_(j.get<double>());
    if (j.is_array()) {
        py::list out;
        for (const auto& v : j) out.append(json_to_py(v));
        return out;
    }
    py::dict out;
    for (const auto& [key, value] : j.items())
        out[py::str(key)] = json_to_py(value);
    return out;
}

Real real_from(const py::object& o) {
    if (py::isinstance<Real>(o)) return o.cast<Real>();
    if (py::isinstance<py::int_>(o)) return Real(from_pyint(o));
    return parse_real_literal(o.cast<std::string>());
}

AlphaSpec alpha_from(const py::object& o) {
    if (py::isinstance<Real>(o)) return o.cast<Real>();
    return parse_alpha_spec(o.cast<std::string>());
}

std::vector<Int> int_vector(const py::object& o) {
    std::vector<Int> out;
    for (const auto& item : o.cast<py::sequence>())
        out.push_back(from_pyint(py::cast<py::int_>(item)));
    return out;
}

Strictness strictness_from(const std::string& s) {
    if (s == "theorem-proof") return Strictness::TheoremProof;
    if (s == "definition") return Strictness::Definition;
    throw Error(ErrorCode::ParseError, "python", "strictness",
                "strictness must be 'theorem-proof' or 'definition'");
}

AbsDigits abs_sequence(const py::object& digits, const py::object& b0,
                       bool prefix, const py::object& period) {
    AbsDigits seq;
    seq.b0 = from_pyint(py::cast<py::int_>(b0));
    if (py::isinstance<py::str>(digits)) {
        DigitLiteral lit = parse_digit_literal(digits.cast<std::string>());
        seq.digits = std::move(lit.digits);
        seq.period = std::move(lit.period);
    } else {
        seq.digits = int_vector(digits);
        if (!period.is_none()) seq.period = int_vector(period);
    }
    seq.intent = !seq.period.empty() ? SeqIntent::Periodic
                 : prefix            ? SeqIntent::Prefix
                                     : SeqIntent::Finite;
    return seq;
}

AltDigits alt_sequence(const py::object& digits, const py::object& c0,
                       bool prefix, const py::object& period,
                       const std::string& strictness) {
    AbsDigits abs = abs_sequence(digits, c0, prefix, period);
    AltDigits seq;
    seq.c0 = std::move(abs.b0);
    seq.digits = std::move(abs.digits);
    seq.period = std::move(abs.period);
    seq.intent = abs.intent;
    seq.strictness = strictness_from(strictness);
    return seq;
}

size_t context_digits(const AlphaContext& ctx, size_t want) {
    if (auto avail = ctx.available_digits()) return std::min(want, *avail);
    return want;
}

}  // namespace

PYBIND11_MODULE(_ostrowski, m) {
    m.doc() = "Exact continued fraction and Ostrowski expansions";

    py::class_<Real>(m, "Real")
        .def(py::init([](const py::object& o) { return real_from(o); }),
             py::arg("value"),
             "Construct from an int, a 'rat:P/Q' or 'quad:(P+Q*sqrt(D))/R' "
             "literal, or another Real.")
        .def_static(
            "rational",
            [](const py::int_& num, const py::int_& den) {
                return Real::rational(from_pyint(num), from_pyint(den));
            },
            py::arg("num"), py::arg("den"))
        .def_static(
            "quadratic",
            [](const py::int_& p, const py::int_& q, const py::int_& d,
               const py::int_& r) {
                return Real::quadratic(from_pyint(p), from_pyint(q),
                                       from_pyint(d), from_pyint(r));
            },
            py::arg("p"), py::arg("q"), py::arg("d"), py::arg("r"))
        .def_property_readonly("p", [](const Real& x) { return to_pyint(x.p()); })
        .def_property_readonly("q", [](const Real& x) { return to_pyint(x.q()); })
        .def_property_readonly("d", [](const Real& x) { return to_pyint(x.d()); })
        .def_property_readonly("r", [](const Real& x) { return to_pyint(x.r()); })
        .def("is_rational", &Real::is_rational)
        .def("is_integer", &Real::is_integer)
        .def("sign", &Real::sign)
        .def("floor", [](const Real& x) { return to_pyint(x.floor()); })
        .def("ceil", [](const Real& x) { return to_pyint(x.ceil()); })
        .def("decimal", &Real::decimal, py::arg("digits") = 50)
        .def("literal", &Real::literal)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__abs__", &Real::abs)
        .def("__repr__",
             [](const Real& x) { return "Real('" + x.literal() + "')"; })
        .def("__str__", [](const Real& x) { return x.decimal(50); });

    py::register_local_exception<Error>(m, "OstrowskiError", PyExc_ValueError);

    m.def("parity", [](size_t k) { return parity(k); }, py::arg("k"));

    m.def(
        "cf_expand",
        [](const py::object& r, size_t max_digits) {
            return json_to_py(cf_json(cf_expand(real_from(r), max_digits)));
        },
        py::arg("r"), py::arg("max_digits") = 64,
        "Continued fraction expansion with period detection.");

    m.def(
        "theta",
        [](const py::object& alpha, size_t depth, unsigned precision) {
            AlphaSpec spec = alpha_from(alpha);
            auto ctx = AlphaContext::make(spec);
            size_t n = context_digits(*ctx, depth);
            Json j;
            j["alpha"] = alpha_json(spec, precision);
            j["cf"] = cf_json(ctx->cf(n));
            j["convergents"] = convergents_json(convergents(*ctx, n));
            j["thetas"] = theta_json(theta_seq(*ctx, n), precision);
            return json_to_py(j);
        },
        py::arg("alpha"), py::arg("depth") = 16, py::arg("precision") = 50,
        "Convergents and theta coefficients of the base alpha.");

    m.def(
        "check_identities",
        [](const py::object& alpha, size_t depth, unsigned precision) {
            AlphaSpec spec = alpha_from(alpha);
            auto ctx = AlphaContext::make(spec);
            return json_to_py(identities_json(
                spec, check_identities(*ctx, depth, precision), precision));
        },
        py::arg("alpha"), py::arg("depth") = 40, py::arg("precision") = 50);

    m.def(
        "abs_expand",
        [](const py::object& alpha, const py::object& beta, size_t max_digits,
           unsigned precision) {
            AlphaSpec spec = alpha_from(alpha);
            auto ctx = AlphaContext::make(spec);
            auto [digits, trace] = abs_expand(*ctx, real_from(beta), max_digits);
            return json_to_py(abs_expansion_json(spec, *ctx, digits, precision));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("max_digits") = 64,
        py::arg("precision") = 50);

    m.def(
        "abs_evaluate",
        [](const py::object& alpha, const py::object& digits, size_t depth,
           const py::object& b0, bool prefix, const py::object& period,
           unsigned precision) {
            AlphaSpec spec = alpha_from(alpha);
            auto ctx = AlphaContext::make(spec);
            AbsDigits seq = abs_sequence(digits, b0, prefix, period);
            return json_to_py(eval_json(spec, abs_evaluate(*ctx, seq, depth),
                                        "absolute", precision));
        },
        py::arg("alpha"), py::arg("digits"), py::arg("depth") = 64,
        py::arg("b0") = 0, py::arg("prefix") = false,
        py::arg("period") = py::none(), py::arg("precision") = 50);

    m.def(
        "abs_validate",
        [](const py::object& alpha, const py::object& digits, bool prefix,
           const py::object& period) {
            AlphaSpec spec = alpha_from(alpha);
            auto ctx = AlphaContext::make(spec);
            AbsDigits seq = abs_sequence(digits, py::int_(0), prefix, period);
            size_t want = seq.digits.size() + 2 * (seq.period.size() + 1);
            Verdict v = abs_validate(ctx->cf(context_digits(*ctx, want)), seq);
            return json_to_py(verdict_json(v));
        },
        py::arg("alpha"), py::arg("digits"), py::arg("prefix") = false,
        py::arg("period") = py::none());

    m.def(
        "abs_expand_line",
        [](const py::object& alpha, const py::object& r, size_t max_digits,
           unsigned precision) {
            AlphaSpec spec = alpha_from(alpha);
            auto ctx = AlphaContext::make(spec);
            auto [digits, trace] =
                abs_expand_line(*ctx, real_from(r), max_digits);
            return json_to_py(abs_expansion_json(spec, *ctx, digits, precision));
        },
        py::arg("alpha"), py::arg("r"), py::arg("max_digits") = 64,
        py::arg("precision") = 50);

    m.def(
        "alt_expand",
        [](const py::object& alpha, const py::object& gamma, size_t max_digits,
           const std::string& strictness, unsigned precision) {
            AlphaSpec spec = alpha_from(alpha);
            auto ctx = AlphaContext::make(spec);
            auto [digits, trace] =
                alt_expand(*ctx, real_from(gamma), max_digits);
            digits.strictness = strictness_from(strictness);
            return json_to_py(alt_expansion_json(spec, *ctx, digits, precision));
        },
        py::arg("alpha"), py::arg("gamma"), py::arg("max_digits") = 64,
        py::arg("strictness") = "theorem-proof", py::arg("precision") = 50);

    m.def(
        "alt_evaluate",
        [](const py::object& alpha, const py::object& digits, size_t depth,
           const py::object& c0, bool prefix, const py::object& period,
           const std::string& strictness, unsigned precision) {
            AlphaSpec spec = alpha_from(alpha);
            auto ctx = AlphaContext::make(spec);
            AltDigits seq = alt_sequence(digits, c0, prefix, period, strictness);
            return json_to_py(eval_json(spec, alt_evaluate(*ctx, seq, depth),
                                        "alternating", precision));
        },
        py::arg("alpha"), py::arg("digits"), py::arg("depth") = 64,
        py::arg("c0") = 0, py::arg("prefix") = false,
        py::arg("period") = py::none(),
        py::arg("strictness") = "theorem-proof", py::arg("precision") = 50);

    m.def(
        "alt_validate",
        [](const py::object& alpha, const py::object& digits, bool prefix,
           const py::object& period, const std::string& strictness) {
            AlphaSpec spec = alpha_from(alpha);
            auto ctx = AlphaContext::make(spec);
            AltDigits seq =
                alt_sequence(digits, py::int_(0), prefix, period, strictness);
            size_t want = seq.digits.size() + 2 * (seq.period.size() + 1);
            Verdict v = alt_validate(ctx->cf(context_digits(*ctx, want)), seq,
                                     seq.strictness);
            return json_to_py(verdict_json(v));
        },
        py::arg("alpha"), py::arg("digits"), py::arg("prefix") = false,
        py::arg("period") = py::none(),
        py::arg("strictness") = "theorem-proof");

    m.def(
        "alt_expand_line",
        [](const py::object& alpha, const py::object& r, size_t max_digits,
           const std::string& strictness, unsigned precision) {
            AlphaSpec spec = alpha_from(alpha);
            auto ctx = AlphaContext::make(spec);
            auto [digits, trace] =
                alt_expand_line(*ctx, real_from(r), max_digits);
            digits.strictness = strictness_from(strictness);
            return json_to_py(alt_expansion_json(spec, *ctx, digits, precision));
        },
        py::arg("alpha"), py::arg("r"), py::arg("max_digits") = 64,
        py::arg("strictness") = "theorem-proof", py::arg("precision") = 50);

    m.def(
        "certify_uniqueness",
        [](const py::object& alpha, const std::string& variant, size_t depth,
           const std::string& strictness) {
            AlphaSpec spec = alpha_from(alpha);
            auto ctx = AlphaContext::make(spec);
            EnumerationReport report;
            if (variant == "absolute")
                report = certify_uniqueness_abs(*ctx, depth);
            else if (variant == "alternating")
                report = certify_uniqueness_alt(*ctx, depth,
                                                strictness_from(strictness));
            else
                throw Error(ErrorCode::ParseError, "python", "certify",
                            "variant must be 'absolute' or 'alternating'");
            return json_to_py(report_json(report));
        },
        py::arg("alpha"), py::arg("variant") = "absolute", py::arg("depth") = 8,
        py::arg("strictness") = "theorem-proof");
}
