#include "weyldual/derham.hpp"

#include <algorithm>
#include <future>

#include "weyldual/errors.hpp"

namespace weyldual {

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k,
                                                      WedgeConvention conv) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t j = start; j < n; ++j) {
      cur.push_back(j);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  if (conv == WedgeConvention::kColexRightInsert) {
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
  }
  return out;
}

Label subset_degree(const GradingSpec& spec, const std::vector<std::size_t>& J) {
  Label d = spec.zero();
  for (std::size_t j : J) d = d + spec.deg_x(j);
  return d;
}

std::size_t position(const std::vector<std::vector<std::size_t>>& list,
                     const std::vector<std::size_t>& J) {
  return static_cast<std::size_t>(std::find(list.begin(), list.end(), J) - list.begin());
}

}  // namespace

std::vector<std::size_t> SummandComplex::cohomology() const {
  const std::size_t n = object_dims.size() - 1;
  std::vector<std::size_t> out(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    ExactMatrix in;
    ExactMatrix outgoing;
    if (!homological) {
      in = i > 0 ? differentials[i - 1] : ExactMatrix(object_dims[0], 0);
      outgoing = i < n ? differentials[i] : ExactMatrix(0, object_dims[n]);
    } else {
      outgoing = i > 0 ? differentials[i - 1] : ExactMatrix(0, object_dims[0]);
      in = i < n ? differentials[i] : ExactMatrix(object_dims[n], 0);
    }
    out[i] = cohomology_dim(in, outgoing);
  }
  return out;
}

SummandComplex build_summand(const GradedPresentation& m, const Label& a,
                             WedgeConvention convention) {
  const auto& spec = m.spec();
  const std::size_t n = m.n();
  SummandComplex c;
  c.label = a;
  std::vector<std::vector<std::size_t>> block_dims(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    c.subsets.push_back(subsets_of_size(n, i, convention));
  }
  for (std::size_t i = 0; i <= n; ++i) {
    std::size_t total = 0;
    for (const auto& J : c.subsets[i]) {
      const auto d = m.dim_at(a - subset_degree(spec, J));
      if (!d) c.certified = false;
      block_dims[i].push_back(d.value_or(0));
      total += d.value_or(0);
    }
    c.object_dims.push_back(total);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Block> blocks;
    for (std::size_t col = 0; col < c.subsets[i].size(); ++col) {
      const auto& J = c.subsets[i][col];
      const Label src = a - subset_degree(spec, J);
      if (block_dims[i][col] == 0) continue;
      for (std::size_t s = 0; s < n; ++s) {
        if (std::find(J.begin(), J.end(), s) != J.end()) continue;
        std::vector<std::size_t> Jp = J;
        Jp.insert(std::upper_bound(Jp.begin(), Jp.end(), s), s);
        const std::size_t row = position(c.subsets[i + 1], Jp);
        if (block_dims[i + 1][row] == 0) continue;
        auto mat = m.d_map(s, src);
        if (!mat) {
          c.certified = false;
          continue;
        }
        std::size_t flips = 0;
        for (std::size_t j : J) {
          if (convention == WedgeConvention::kLexLeftInsert ? j < s : j > s) ++flips;
        }
        blocks.push_back({row, col, Rational(flips % 2 ? -1 : 1) * (*mat)});
      }
    }
    c.differentials.push_back(assemble_blocks(block_dims[i + 1], block_dims[i], blocks));
  }
  return c;
}

SummandComplex build_koszul_summand(const GradedPresentation& m, const Label& a, int sign) {
  const auto& spec = m.spec();
  const std::size_t n = m.n();
  SummandComplex c;
  c.label = a;
  c.homological = true;
  std::vector<std::vector<std::size_t>> block_dims(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    c.subsets.push_back(subsets_of_size(n, i, WedgeConvention::kLexLeftInsert));
    std::size_t total = 0;
    for (const auto& J : c.subsets[i]) {
      const auto d = m.dim_at(a + subset_degree(spec, J));
      if (!d) c.certified = false;
      block_dims[i].push_back(d.value_or(0));
      total += d.value_or(0);
    }
    c.object_dims.push_back(total);
  }
  // differentials[i] : object i+1 -> object i
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Block> blocks;
    for (std::size_t col = 0; col < c.subsets[i + 1].size(); ++col) {
      const auto& J = c.subsets[i + 1][col];
      if (block_dims[i + 1][col] == 0) continue;
      const Label src = a + subset_degree(spec, J);
      for (std::size_t s = 0; s < J.size(); ++s) {
        std::vector<std::size_t> Jm = J;
        Jm.erase(Jm.begin() + static_cast<std::ptrdiff_t>(s));
        const std::size_t row = position(c.subsets[i], Jm);
        if (block_dims[i][row] == 0) continue;
        auto mat = m.d_map(J[s], src);
        if (!mat) {
          c.certified = false;
          continue;
        }
        const int sg = (s % 2 ? -1 : 1) * sign;
        blocks.push_back({row, col, Rational(sg) * (*mat)});
      }
    }
    c.differentials.push_back(assemble_blocks(block_dims[i], block_dims[i + 1], blocks));
  }
  return c;
}

bool CohomologyTable::complete() const {
  return std::all_of(totals.begin(), totals.end(),
                     [](const auto& kv) { return kv.second.complete; });
}

std::vector<std::size_t> CohomologyTable::total_vector() const {
  std::vector<std::size_t> v;
  for (const auto& [i, t] : totals) v.push_back(t.dim);
  return v;
}

std::optional<std::set<Label>> certified_support(const GradedPresentation& m) {
  if (!check_euler_certificate(m)) return std::nullopt;
  const std::size_t r = m.spec().lattice_rank();
  std::vector<std::set<int>> axis(r);
  for (const auto& c : *m.euler_defects()) {
    for (std::size_t k = 0; k < r; ++k) axis[k].insert(-c[k]);
  }
  std::set<Label> out{Label::zero(r)};
  for (std::size_t k = 0; k < r; ++k) {
    std::set<Label> next;
    for (const auto& base : out) {
      for (int v : axis[k]) {
        Label l = base;
        l[k] = v;
        next.insert(l);
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

struct LabelResult {
  Label label;
  bool certified = false;
  std::vector<std::size_t> dims;
};

template <typename Fn>
std::vector<LabelResult> run_labels(const std::vector<Label>& labels, unsigned workers, Fn fn) {
  std::vector<LabelResult> results(labels.size());
  workers = std::max(1u, workers);
  if (workers == 1 || labels.size() < 2) {
    for (std::size_t k = 0; k < labels.size(); ++k) results[k] = fn(labels[k]);
    return results;
  }
  std::vector<std::future<void>> tasks;
  for (unsigned w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < labels.size(); k += workers) results[k] = fn(labels[k]);
    }));
  }
  for (auto& t : tasks) t.get();
  return results;
}

CohomologyTable assemble(const GradedPresentation& m, bool homological,
                         const std::vector<LabelResult>& results,
                         const std::vector<int>& indices, bool complete) {
  CohomologyTable table{m.spec(), m.window(), homological, {}, {}, 0, 0};
  for (int i : indices) table.totals[i] = TableTotal{0, complete};
  for (const auto& r : results) {
    ++table.labels_computed;
    if (r.certified) ++table.labels_certified;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      const int i = indices[k];
      const std::size_t dim = r.dims[k];
      if (dim > 0 || !r.certified) table.entries[{r.label, i}] = TableEntry{dim, r.certified};
      if (r.certified) table.totals[i].dim += dim;
    }
  }
  return table;
}

std::vector<int> all_indices(std::size_t n) {
  std::vector<int> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = static_cast<int>(i);
  return v;
}

/// Whether every label of `support` passes `certified_at`.
template <typename Pred>
bool support_certified(const GradedPresentation& m, const Label& offset, Pred certified_at) {
  if (m.window().all_flags_set()) return true;
  auto support = certified_support(m);
  if (!support) return false;
  return std::all_of(support->begin(), support->end(),
                     [&](const Label& s) { return certified_at(s + offset); });
}

}  // namespace

CohomologyTable derham_cohomology(const GradedPresentation& m, const EngineOptions& opts) {
  const Label D = m.spec().d_total();
  const auto labels = Window::box(m.window().lo, m.window().hi + D).labels();
  auto results = run_labels(labels, opts.workers, [&](const Label& a) {
    const auto c = build_summand(m, a, opts.convention);
    return LabelResult{a, c.certified, c.cohomology()};
  });
  const bool complete = support_certified(m, m.spec().zero(), [&](const Label& s) {
    return build_summand(m, s, opts.convention).certified;
  });
  return assemble(m, false, results, all_indices(m.n()), complete);
}

CohomologyTable koszul_homology(const GradedPresentation& m, int sign, const EngineOptions& opts) {
  const Label D = m.spec().d_total();
  const auto labels = Window::box(m.window().lo - D, m.window().hi).labels();
  auto results = run_labels(labels, opts.workers, [&](const Label& a) {
    const auto c = build_koszul_summand(m, a, sign);
    return LabelResult{a, c.certified, c.cohomology()};
  });
  // h_i at a matches h^{n-i} at a + D.
  const bool complete = support_certified(m, -D, [&](const Label& s) {
    return build_koszul_summand(m, s, sign).certified;
  });
  return assemble(m, true, results, all_indices(m.n()), complete);
}

namespace {

LabelResult h0_at(const GradedPresentation& m, const Label& a) {
  LabelResult r{a, true, {0}};
  const auto dim = m.dim_at(a);
  if (!dim) return LabelResult{a, false, {0}};
  std::vector<ExactMatrix> rows;
  for (std::size_t i = 0; i < m.n(); ++i) {
    auto mat = m.d_map(i, a);
    if (!mat) {
      r.certified = false;
      continue;
    }
    rows.push_back(std::move(*mat));
  }
  r.dims[0] = *dim - (rows.empty() ? 0 : rank(vstack(rows)));
  return r;
}

LabelResult hn_at(const GradedPresentation& m, const Label& a) {
  const Label c = a - m.spec().d_total();
  LabelResult r{a, true, {0}};
  const auto dim = m.dim_at(c);
  if (!dim) return LabelResult{a, false, {0}};
  std::vector<ExactMatrix> cols;
  for (std::size_t i = 0; i < m.n(); ++i) {
    auto mat = m.d_map(i, c + m.spec().deg_x(i));
    if (!mat) {
      r.certified = false;
      continue;
    }
    cols.push_back(std::move(*mat));
  }
  r.dims[0] = *dim - (cols.empty() ? 0 : rank(hstack(cols)));
  return r;
}

}  // namespace

CohomologyTable h0_fast(const GradedPresentation& m) {
  const auto labels = m.window().labels();
  auto results = run_labels(labels, 1, [&](const Label& a) { return h0_at(m, a); });
  const bool complete = support_certified(m, m.spec().zero(),
                                          [&](const Label& s) { return h0_at(m, s).certified; });
  return assemble(m, false, results, {0}, complete);
}

CohomologyTable hn_fast(const GradedPresentation& m) {
  const Label D = m.spec().d_total();
  const auto labels = m.window().translated(D).labels();
  auto results = run_labels(labels, 1, [&](const Label& a) { return hn_at(m, a); });
  const bool complete = support_certified(m, m.spec().zero(),
                                          [&](const Label& s) { return hn_at(m, s).certified; });
  return assemble(m, false, results, {static_cast<int>(m.n())}, complete);
}

}  // namespace weyldual
