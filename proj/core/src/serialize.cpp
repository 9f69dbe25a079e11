#include "qrhc/serialize.hpp"

#include <stdexcept>

#include <json.hpp>

namespace qrhc {

JsonValue operator_to_json(const HermitianOperator& f) {
  const EighResult& spec = f.spectrum();
  const std::size_t d = f.dim();
  JsonValue eigs = JsonValue::array();
  for (double v : spec.eigenvalues) eigs.append(v);
  JsonValue basis = JsonValue::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const cplx z = spec.eigenvectors(i, j);
      basis.append(JsonValue::array().append(z.real()).append(z.imag()));
    }
  JsonValue out = JsonValue::object();
  out.set("dim", d);
  out.set("eigenvalues", std::move(eigs));
  out.set("basis", std::move(basis));
  return out;
}

HermitianOperator operator_from_json(const std::string& text) {
  const auto parsed = nlohmann::json::parse(text);
  const std::size_t d = parsed.at("dim").get<std::size_t>();
  const auto& eigs = parsed.at("eigenvalues");
  const auto& basis = parsed.at("basis");
  if (eigs.size() != d || basis.size() != d * d)
    throw std::invalid_argument("operator_from_json: inconsistent sizes");
  ComplexMatrix u(d);
  for (std::size_t k = 0; k < d * d; ++k)
    u(k / d, k % d) = cplx(basis[k][0].get<double>(), basis[k][1].get<double>());
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < d; ++k)
        acc += u(i, k) * eigs[k].get<double>() * std::conj(u(j, k));
      m(i, j) = acc;
    }
  return HermitianOperator(std::move(m), 1e-8);
}

}  // namespace qrhc
