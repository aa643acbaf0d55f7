#ifndef STACP_MATRIX_HPP
#define STACP_MATRIX_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace stacp {

// id <-> dense index map, shared by every stage of a run.
struct Catalog {
  std::vector<std::string> ids;
  std::unordered_map<std::string, int> index;

  int add(const std::string& id) {
    auto it = index.find(id);
    if (it != index.end()) return it->second;
    int idx = static_cast<int>(ids.size());
    ids.push_back(id);
    index.emplace(id, idx);
    return idx;
  }
  int at(const std::string& id) const {
    auto it = index.find(id);
    return it == index.end() ? -1 : it->second;
  }
  int size() const { return static_cast<int>(ids.size()); }
};

// Sparse user x POI visit-frequency matrix. Stored entries are >= 1; an
// absent entry means zero. Rows are sorted by POI index.
struct InteractionMatrix {
  int n_users = 0;
  int n_pois = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> rows;  // (poi, count)

  InteractionMatrix() = default;
  InteractionMatrix(int users, int pois)
      : n_users(users), n_pois(pois), rows(static_cast<std::size_t>(users)) {}

  std::int64_t at(int u, int l) const {
    for (const auto& [poi, c] : rows[u])
      if (poi == l) return c;
    return 0;
  }

  std::int64_t row_sum(int u) const {
    std::int64_t s = 0;
    for (const auto& [poi, c] : rows[u]) s += c;
    return s;
  }

  std::int64_t total() const {
    std::int64_t s = 0;
    for (int u = 0; u < n_users; ++u) s += row_sum(u);
    return s;
  }

  std::size_t nnz() const {
    std::size_t s = 0;
    for (const auto& r : rows) s += r.size();
    return s;
  }

  // global per-POI check-in counts (TopPopular's ranking signal)
  std::vector<std::int64_t> poi_totals() const {
    std::vector<std::int64_t> t(static_cast<std::size_t>(n_pois), 0);
    for (const auto& r : rows)
      for (const auto& [poi, c] : r) t[static_cast<std::size_t>(poi)] += c;
    return t;
  }
};

}  // namespace stacp

#endif
