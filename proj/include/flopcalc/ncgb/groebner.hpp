#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flopcalc/pathalg/presentation.hpp"

namespace flopcalc::ncgb {

using pathalg::AlgebraPresentation;
using pathalg::Element;
using pathalg::MonomialOrder;
using pathalg::Path;
using pathalg::RatFunc;
using pathalg::VertexId;

/// Reduction-step budget; FLOPCALC_BUDGET overrides the default of 10^6.
struct Budget {
  std::uint64_t limit = 1000000;
  std::uint64_t used = 0;
  void charge(std::uint64_t n = 1);
};
std::uint64_t default_budget();

struct Rule {
  Path lead;
  Element tail;
};

class GroebnerBasis {
 public:
  GroebnerBasis(const AlgebraPresentation& alg, MonomialOrder order);
  ~GroebnerBasis();
  GroebnerBasis(GroebnerBasis&&) noexcept;
  GroebnerBasis& operator=(GroebnerBasis&&) noexcept;
  GroebnerBasis(const GroebnerBasis&);

  /// Runs completion up to the given weighted degree; may be called again with a larger degree.
  void extend(int max_degree, Budget& budget);

  const AlgebraPresentation& algebra() const;
  const MonomialOrder& order() const;
  int truncation_degree() const;
  /// No overlap or pending polynomial is left above the truncation degree.
  bool complete() const;
  /// Rules sorted by leading word, smallest first.
  std::vector<Rule> rules() const;
  std::size_t size() const;
  /// Longest leading word, in letters.
  std::size_t max_lead_length() const;
  std::vector<VertexId> dead_vertices() const;

  bool reducible(const Path& p) const;
  Element normal_form(const Element& x) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

GroebnerBasis truncated_groebner(const AlgebraPresentation& alg, const MonomialOrder& order, int max_degree,
                                 std::uint64_t budget = default_budget());
GroebnerBasis truncated_groebner(const AlgebraPresentation& alg, int max_degree,
                                 std::uint64_t budget = default_budget());

/// Throws DomainError when deg(x) exceeds the truncation degree of an incomplete basis.
Element normal_form(const Element& x, const GroebnerBasis& gb);

/// Irreducible paths with the given endpoints (nullopt = any), up to max_degree (nullopt = all;
/// requires a finite normal-word set).
std::vector<Path> enumerate_normal_words(const GroebnerBasis& gb, std::optional<VertexId> source = std::nullopt,
                                         std::optional<VertexId> target = std::nullopt,
                                         std::optional<int> max_degree = std::nullopt);

/// True when the irreducible words of a complete basis form a finite set.
bool finite_normal_words(const GroebnerBasis& gb);

struct DimensionResult {
  bool finite = false;
  std::size_t value = 0;
  int degree = 0;  ///< truncation degree at which completion closed
};

/// Raises the truncation degree until completion closes (BudgetExceeded past degree 400).
GroebnerBasis complete_groebner(const AlgebraPresentation& alg, const MonomialOrder& order,
                                std::uint64_t budget = default_budget());

/// complete_groebner, then counts normal words.
DimensionResult dimension(const AlgebraPresentation& alg, const MonomialOrder& order,
                          std::uint64_t budget = default_budget());
DimensionResult dimension(const AlgebraPresentation& alg, std::uint64_t budget = default_budget());

std::string serialize(const GroebnerBasis& gb);

}  // namespace flopcalc::ncgb
