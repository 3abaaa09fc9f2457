#include "dcc/constructors.hpp"

namespace dcc {

std::string_view constructor_name(Constructor c) {
  switch (c) {
    case Constructor::kLovaszPeeling: return "lp";
    case Constructor::kSuccinctPeeling: return "sp";
    case Constructor::kGlobalAdmissibility: return "ga";
    case Constructor::kLocalAdmissibility: return "la";
    case Constructor::kLocalPeeling: return "pl";
  }
  return "?";
}

std::optional<Constructor> parse_constructor(std::string_view name) {
  for (Constructor c : kAllConstructors) {
    if (constructor_name(c) == name) return c;
  }
  return std::nullopt;
}

DccRepresentation construct(const Graph& g, Constructor c) {
  switch (c) {
    case Constructor::kLovaszPeeling: return lovasz_peeling(g);
    case Constructor::kSuccinctPeeling: return succinct_peeling(g);
    case Constructor::kGlobalAdmissibility: return global_admissibility(g);
    case Constructor::kLocalAdmissibility: return local_admissibility(g);
    case Constructor::kLocalPeeling: return local_peeling(g);
  }
  return {};
}

}  // namespace dcc
