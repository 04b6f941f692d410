#include "ecalg/linalg.hpp"

namespace ecalg {

namespace {

// Field shared by every entry; throws on ragged rows or mixed fields.
const FieldElement* common_field(const ElementMatrix& rows, const std::vector<FieldElement>* rhs) {
  const FieldElement* first = nullptr;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  auto visit = [&](const FieldElement& e) {
    if (first == nullptr) {
      first = &e;
    } else if (!same_field(first->field(), e.field())) {
      throw FieldError(FieldErrc::mixed_fields, "matrix mixes " + first->spec().to_string() + " and " +
                                                    e.spec().to_string());
    }
  };
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (const auto& e : row) visit(e);
  }
  if (rhs != nullptr) {
    if (rhs->size() != rows.size()) throw std::invalid_argument("rhs length does not match row count");
    for (const auto& e : *rhs) visit(e);
  }
  return first;
}

template <ExactField K>
Matrix<K> unwrap(const ElementMatrix& rows) {
  Matrix<K> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Value<K>> r;
    r.reserve(row.size());
    for (const auto& e : row) r.push_back(std::get<Value<K>>(e.repr()));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

std::size_t matrix_rank(const ElementMatrix& rows) {
  const FieldElement* f = common_field(rows, nullptr);
  if (f == nullptr) return 0;
  return std::visit([&](const auto& k) { return matrix_rank(k, unwrap<std::decay_t<decltype(k)>>(rows)); },
                    f->field());
}

ElementSolution solve_linear(const ElementMatrix& coefficients, const std::vector<FieldElement>& rhs) {
  const FieldElement* f = common_field(coefficients, &rhs);
  if (f == nullptr) return {SolutionKind::unique, {}, {}};
  const AnyField field = f->field();
  return std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        std::vector<Value<K>> b;
        for (const auto& e : rhs) b.push_back(std::get<Value<K>>(e.repr()));
        const auto sol = solve_linear(k, unwrap<K>(coefficients), b);
        auto wrap = [&](const std::vector<Value<K>>& v) {
          std::vector<FieldElement> out;
          for (const auto& x : v) out.emplace_back(field, FieldElement::Repr(x));
          return out;
        };
        ElementSolution out;
        out.kind = sol.kind;
        out.particular = wrap(sol.particular);
        for (const auto& v : sol.kernel) out.kernel.push_back(wrap(v));
        return out;
      },
      field);
}

}  // namespace ecalg
