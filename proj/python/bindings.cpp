#include "twistsum/cli.hpp"
#include "twistsum/errors.hpp"
#include "twistsum/serialize.hpp"
#include "twistsum/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace twistsum;

namespace {

// Exact values cross the boundary in the JSON form: "p/q" strings for rationals,
// {"k": k, "coeffs": [...]} otherwise.
py::object to_python(const Json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

SumSpec make_spec(const std::vector<long long>& weights, const std::vector<long long>& limits, const std::string& x,
                  unsigned s, int k, long long t)
{
    return SumSpec(WeightVector(weights), limits, parse_rational(x), s, TwistSpec(k, t));
}

} // namespace

PYBIND11_MODULE(_twistsum, m)
{
    m.doc() = "Exact twisted power sums and generalized Euler-zeta values";

    auto base = py::register_exception<Error>(m, "TwistsumError", PyExc_RuntimeError);
    auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<SingularTwist>(m, "SingularTwist", domain.ptr());

    m.def(
        "closed_sum",
        [](const std::vector<long long>& weights, const std::vector<long long>& limits, const std::string& x,
           unsigned s, int k, long long t) { return to_python(to_json(closed_sum(make_spec(weights, limits, x, s, k, t)))); },
        py::arg("weights"), py::arg("limits"), py::arg("x") = "0", py::arg("s") = 0, py::arg("k") = 2,
        py::arg("t") = 1);
    m.def(
        "brute_sum",
        [](const std::vector<long long>& weights, const std::vector<long long>& limits, const std::string& x,
           unsigned s, int k, long long t) { return to_python(to_json(brute_sum(make_spec(weights, limits, x, s, k, t)))); },
        py::arg("weights"), py::arg("limits"), py::arg("x") = "0", py::arg("s") = 0, py::arg("k") = 2,
        py::arg("t") = 1);
    m.def(
        "bernoulli_numbers",
        [](std::size_t n) {
            std::vector<std::string> out;
            for (const auto& b : bernoulli_numbers(n)) {
                out.push_back(to_json(b).get<std::string>());
            }
            return out;
        },
        py::arg("n_max"));
    m.def(
        "gen_euler_poly",
        [](std::size_t degree, const std::vector<long long>& weights, int k, long long t) {
            return to_python(to_json(gen_euler_poly(degree, TwistSpec(k, t), WeightVector(weights))));
        },
        py::arg("m"), py::arg("weights"), py::arg("k") = 2, py::arg("t") = 1);
    m.def(
        "zeta_accelerated",
        [](Complex s, double x, const std::vector<long long>& weights, int k, long long t) {
            return zeta_accelerated(ZetaSpec(s, x, TwistSpec(k, t), WeightVector(weights)));
        },
        py::arg("s"), py::arg("x"), py::arg("weights") = std::vector<long long>{1}, py::arg("k") = 2,
        py::arg("t") = 1);
    m.def(
        "lemma2_check",
        [](unsigned order, const std::string& c, const std::vector<long long>& weights, int k, long long t) {
            return to_python(to_json(lemma2_check(order, parse_rational(c), TwistSpec(k, t), WeightVector(weights))));
        },
        py::arg("m"), py::arg("c"), py::arg("weights"), py::arg("k") = 2, py::arg("t") = 1);
    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed) {
            const auto parsed = parse_suite(suite);
            if (!parsed) {
                throw DomainError("unknown suite " + suite);
            }
            return run_verify(*parsed, seed).failures();
        },
        py::arg("suite") = "all", py::arg("seed") = 0, "Runs a property suite and returns the number of failures.");
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line interface in-process; returns (exit code, stdout, stderr).");
}
