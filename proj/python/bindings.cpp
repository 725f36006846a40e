#include <primegalois/classifier.hpp>
#include <primegalois/cli.hpp>
#include <primegalois/cyclotomic.hpp>
#include <primegalois/errors.hpp>
#include <primegalois/group_table.hpp>
#include <primegalois/numtheory.hpp>
#include <primegalois/parse.hpp>
#include <primegalois/realize.hpp>
#include <primegalois/report.hpp>
#include <primegalois/sturm.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace primegalois;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

py::object big_int(const mpz_class& z) {
    PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    if (!obj)
        throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

IntPoly poly_from_arg(const py::object& arg) {
    if (py::isinstance<py::str>(arg))
        return parse_poly(arg.cast<std::string>());
    std::vector<std::string> coeffs;
    for (const auto& item : arg.cast<py::sequence>())
        coeffs.push_back(py::str(item).cast<std::string>());
    std::vector<mpz_class> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs)
        c.emplace_back(s);
    return IntPoly(std::move(c));
}

py::object classify_py(const py::object& poly, int budget, bool assume_irreducible,
                       int effort) {
    ClassifyOptions opt;
    opt.prime_budget = budget;
    opt.assume_irreducible = assume_irreducible;
    opt.effort = effort;
    ClassificationReport rep = classify(poly_from_arg(poly), opt);
    return json_to_py(report_json(rep));
}

py::object realize_frobenius_py(int p, int n) {
    RealizationResult r = n == 0 ? realize_full_frobenius(p) : realize_frobenius(p, n);
    ConsistencyReport cc = realization_consistency_check(r);
    return json_to_py(realization_json(r, cc));
}

py::object realize_cyclic_py(int n) {
    RealizationResult r = realize_cyclic_nonreal(n);
    ConsistencyReport cc = realization_consistency_check(r);
    return json_to_py(realization_json(r, cc));
}

py::dict periods_py(std::uint64_t q, std::uint64_t n) {
    std::uint64_t m = primitive_root(q);
    CyclotomicElement alpha = gaussian_period(q, n, m);
    IntPoly g = minimal_polynomial(alpha, static_cast<int>(n), m);
    py::dict out;
    out["q"] = q;
    out["n"] = n;
    out["m"] = m;
    py::list coords;
    for (const auto& c : alpha.coords())
        coords.append(big_int(c));
    out["alpha_coords"] = coords;
    out["minimal_polynomial"] = to_string(g);
    return out;
}

std::string group_table_text_py(int p) { return export_table(group_table(p)); }

py::dict parse_py(const std::string& text) {
    ParsedPoly p = parse_polynomial(text);
    py::dict out;
    out["polynomial"] = to_string(p.poly);
    py::list coeffs;
    for (const auto& c : p.poly.coeffs())
        coeffs.append(big_int(c));
    out["coefficients"] = coeffs;
    out["scale"] = p.scale.get_str();
    out["variable"] = p.variable;
    return out;
}

int count_real_roots_py(const py::object& poly) {
    return count_real_roots(poly_from_arg(poly));
}

std::string discriminant_py(const py::object& poly) {
    return discriminant(poly_from_arg(poly)).get_str();
}

bool is_prime_py(const py::object& n) {
    return is_prime(mpz_class(py::str(n).cast<std::string>()));
}

py::tuple cli_py(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

void translate_error(const Error& e) {
    if (e.code() == errc::parse_error || e.code() == errc::non_univariate)
        PyErr_SetString(PyExc_ValueError, e.what());
    else
        PyErr_SetString(PyExc_RuntimeError, e.what());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Galois groups of prime-degree polynomials over Q";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            translate_error(e);
        }
    });

    m.def("classify", &classify_py, py::arg("poly"), py::arg("budget") = 100,
          py::arg("assume_irreducible") = false, py::arg("effort") = 20,
          "Classify the Galois group; accepts a polynomial string or a\n"
          "low-to-high coefficient sequence. Returns the report as a dict.");
    m.def("realize_frobenius", &realize_frobenius_py, py::arg("p"), py::arg("n") = 0,
          "Realize F_{p n} (n = 0 means n = p-1). Returns the result as a dict.");
    m.def("realize_cyclic", &realize_cyclic_py, py::arg("n"),
          "Realize a non-real cyclic degree-n extension. Returns a dict.");
    m.def("periods", &periods_py, py::arg("q"), py::arg("n"),
          "Gaussian period data for prime q and n | q-1.");
    m.def("group_table_text", &group_table_text_py, py::arg("p"),
          "Cycle-type table of the degree-p candidates, in text form.");
    m.def("parse", &parse_py, py::arg("text"), "Parse a polynomial expression.");
    m.def("count_real_roots", &count_real_roots_py, py::arg("poly"),
          "Number of distinct real roots of a squarefree polynomial.");
    m.def("discriminant", &discriminant_py, py::arg("poly"),
          "Discriminant, as a decimal string (rational when non-monic).");
    m.def("is_prime", &is_prime_py, py::arg("n"), "Primality test.");
    m.def("find_q", &find_q, py::arg("n"), py::arg("limit") = 1000000,
          "Smallest prime q = 1 + (2k-1)n.");
    m.def("primitive_root", &primitive_root, py::arg("q"),
          "Smallest primitive root mod a prime.");
    m.def("cli", &cli_py, py::arg("args"),
          "Run the command-line interface; returns (exit_code, stdout, stderr).");
}
