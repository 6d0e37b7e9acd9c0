#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "kronmul/bipoly.hpp"
#include "kronmul/error.hpp"
#include "kronmul/ksint.hpp"
#include "kronmul/modpoly.hpp"
#include "kronmul/oracle.hpp"

namespace py = pybind11;
using namespace kronmul;

namespace {

// Python ints cross the boundary as little-endian byte strings.
BigNat to_bignat(const py::int_& value) {
  if (value < py::int_(0)) throw PreconditionError("coefficients must be non-negative");
  const auto bits = value.attr("bit_length")().cast<std::size_t>();
  const std::size_t nbytes = (bits + 7) / 8;
  const auto raw = value.attr("to_bytes")(nbytes, "little").cast<std::string>();
  std::vector<Limb> limbs((nbytes + 7) / 8, 0);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    limbs[i / 8] |= static_cast<Limb>(static_cast<unsigned char>(raw[i])) << (8 * (i % 8));
  }
  return BigNat::from_limbs(std::move(limbs));
}

py::int_ to_pyint(const BigNat& value) {
  std::string raw;
  raw.reserve(value.size() * 8);
  for (Limb l : value.limbs()) {
    for (int k = 0; k < 8; ++k) raw.push_back(static_cast<char>((l >> (8 * k)) & 0xff));
  }
  const auto int_type = py::reinterpret_borrow<py::object>(reinterpret_cast<PyObject*>(&PyLong_Type));
  return int_type.attr("from_bytes")(py::bytes(raw), "little").cast<py::int_>();
}

CoeffVec to_coeffs(const std::vector<py::int_>& values, std::size_t bits) {
  if (values.empty()) throw PreconditionError("polynomial must have length >= 1");
  std::vector<BigNat> c;
  c.reserve(values.size());
  for (const auto& v : values) c.push_back(to_bignat(v));
  return bits == 0 ? CoeffVec(c) : CoeffVec(c, bits);
}

std::vector<py::int_> from_coeffs(const CoeffVec& v) {
  std::vector<py::int_> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_pyint(v.at(i)));
  return out;
}

std::vector<py::int_> py_ks_mul(const std::string& variant, const std::vector<py::int_>& f,
                                const std::vector<py::int_>& g, std::size_t bits, bool parallel) {
  const CoeffVec a = to_coeffs(f, bits);
  const CoeffVec b = to_coeffs(g, bits);
  CoeffVec h = [&] {
    py::gil_scoped_release release;
    return ks_mul(parse_variant(variant), a, b, {.parallel = parallel});
  }();
  return from_coeffs(h);
}

std::vector<std::uint64_t> py_mod_mul(const std::vector<std::uint64_t>& f, const std::vector<std::uint64_t>& g,
                                      std::uint64_t modulus, const std::string& variant) {
  const ModPoly a(f, modulus);
  const ModPoly b(g, modulus);
  const VariantChoice choice = parse_variant_choice(variant);
  py::gil_scoped_release release;
  return mod_mul(a, b, choice).coeffs();
}

using Rows = std::vector<std::vector<std::uint64_t>>;

BiPoly<std::uint64_t> to_bipoly(const Rows& rows, const ModRing& ring) {
  if (rows.empty() || rows.front().empty()) throw PreconditionError("bivariate lengths must be >= 1");
  BiPoly<std::uint64_t> p(rows.front().size(), rows.size(), 0);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != p.lx()) throw PreconditionError("every y-coefficient must have the same x-length");
    for (std::size_t i = 0; i < p.lx(); ++i) p.at(i, j) = ring.reduce(rows[j][i]);
  }
  return p;
}

Rows from_bipoly(const BiPoly<std::uint64_t>& p) {
  Rows rows(p.ly());
  for (std::size_t j = 0; j < p.ly(); ++j) rows[j].assign(p.slice(j).begin(), p.slice(j).end());
  return rows;
}

Rows py_bivariate_mod(const Rows& f, const Rows& g, std::uint64_t modulus, const std::string& algorithm) {
  const ModRing ring(modulus);
  const auto a = to_bipoly(f, ring);
  const auto b = to_bipoly(g, ring);
  const auto mul = schoolbook_unimul(ring);
  if (algorithm == "standard") return from_bipoly(bks_standard(a, b, mul, ring));
  if (algorithm == "reciprocal") return from_bipoly(bks_reciprocal(a, b, mul, ring));
  if (algorithm == "negated") return from_bipoly(bks_negated(a, b, mul, ring));
  if (algorithm == "four") return from_bipoly(bks_four(a, b, mul, ring));
  if (algorithm == "schoolbook") return from_bipoly(schoolbook_bivar(a, b, ring));
  throw ParseError("unknown bivariate algorithm '" + algorithm + "'");
}

py::tuple py_reconstruct(const std::vector<py::int_>& u, const std::vector<py::int_>& w, std::size_t width_bits) {
  OverlapDigits d;
  d.width_bits = width_bits;
  d.items = u.empty() ? 0 : u.size() - 1;
  for (const auto& x : u) d.u.push_back(to_bignat(x));
  for (const auto& x : w) d.w.push_back(to_bignat(x));
  ReconstructionTrace trace;
  const CoeffVec h = reconstruct_overlapped(d, &trace);
  return py::make_tuple(from_coeffs(h), trace.delta, trace.epsilon);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Kronecker substitution polynomial multiplication";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<UnderflowError>(m, "UnderflowError", error.ptr());
  py::register_exception<InexactError>(m, "InexactError", error.ptr());
  py::register_exception<ReconstructionError>(m, "ReconstructionError", error.ptr());
  py::register_exception<RingError>(m, "RingError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  py::class_<KsParams>(m, "KsParams")
      .def_readonly("lf", &KsParams::lf)
      .def_readonly("lg", &KsParams::lg)
      .def_readonly("b", &KsParams::b)
      .def_readonly("e", &KsParams::e)
      .def_readonly("n1", &KsParams::n1)
      .def_readonly("n2", &KsParams::n2)
      .def_readonly("n4", &KsParams::n4)
      .def("__repr__", [](const KsParams& p) {
        return "KsParams(lf=" + std::to_string(p.lf) + ", lg=" + std::to_string(p.lg) + ", b=" + std::to_string(p.b) +
               ", e=" + std::to_string(p.e) + ", n1=" + std::to_string(p.n1) + ", n2=" + std::to_string(p.n2) +
               ", n4=" + std::to_string(p.n4) + ")";
      });

  m.def("derive_params", &derive_params, py::arg("lf"), py::arg("lg"), py::arg("b"));
  m.def("ks_mul", &py_ks_mul, py::arg("variant"), py::arg("f"), py::arg("g"), py::arg("bits") = 0,
        py::arg("parallel") = false,
        "Product of two non-negative integer coefficient lists. bits = 0 takes the bound from the inputs.");
  m.def("schoolbook", [](const std::vector<py::int_>& f, const std::vector<py::int_>& g) {
    return from_coeffs(schoolbook_z(to_coeffs(f, 0), to_coeffs(g, 0)));
  });
  m.def("mod_mul", &py_mod_mul, py::arg("f"), py::arg("g"), py::arg("modulus"), py::arg("variant") = "auto");
  m.def(
      "choose_variant",
      [](std::size_t length, std::size_t bits) { return std::string(to_string(choose_variant(length, bits))); },
      py::arg("length"), py::arg("bits"));
  m.def("reconstruct_overlapped", &py_reconstruct, py::arg("u"), py::arg("w"), py::arg("width_bits"),
        "Returns (h, delta, epsilon) from forward digits u and reversed digits w.");
  m.def("bivariate_mod", &py_bivariate_mod, py::arg("f"), py::arg("g"), py::arg("modulus"),
        py::arg("algorithm") = "four", "f[j][i] is the coefficient of x^i y^j.");
}
