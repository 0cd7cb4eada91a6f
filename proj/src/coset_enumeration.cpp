#include <stdexcept>

#include "joinpi/group_presentations.hpp"

namespace joinpi {

namespace {

int column_of(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

// Todd-Coxeter over the trivial subgroup, HLT strategy. When the table is
// full, a lookahead pass (scan without defining) is run and dead rows are
// compacted away before giving up.
class Enumerator {
 public:
  Enumerator(const Presentation& pres, std::int64_t max_cosets)
      : cols_(static_cast<int>(2 * pres.generator_count())), max_(max_cosets) {
    for (const auto& r : pres.relators) {
      std::vector<int> cw;
      for (int x : free_reduce(r)) cw.push_back(column_of(x));
      if (!cw.empty()) rels_.push_back(std::move(cw));
    }
    add_row();
  }

  CosetResult run() {
    CosetResult res;
    for (int a = 0; a < rows(); ++a) {
      for (;;) {
        if (!live(a)) break;
        Status st = process(a);
        if (st == Status::ok) break;
        // Table full: lookahead and compaction.
        lookahead();
        a = compact(a);
        if (rows() >= max_) {
          res.closed = false;
          res.cosets_defined = defined_;
          return res;
        }
      }
    }
    compact(0);
    for (int c = 0; c < rows(); ++c)
      for (int x = 0; x < cols_; ++x)
        if (at(c, x) < 0) throw std::logic_error("coset table incomplete after enumeration");
    res.closed = true;
    res.order = rows();
    res.cosets_defined = defined_;
    res.table.generator_count = cols_ / 2;
    res.table.rows.resize(static_cast<std::size_t>(rows()));
    for (int c = 0; c < rows(); ++c)
      res.table.rows[static_cast<std::size_t>(c)].assign(table_.begin() + static_cast<std::ptrdiff_t>(c) * cols_,
                                                          table_.begin() + static_cast<std::ptrdiff_t>(c + 1) * cols_);
    return res;
  }

 private:
  enum class Status { ok, full };

  int rows() const { return static_cast<int>(parent_.size()); }
  bool live(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(x)]; }

  int add_row() {
    int c = rows();
    parent_.push_back(c);
    table_.resize(table_.size() + static_cast<std::size_t>(cols_), -1);
    return c;
  }

  bool define(int c, int x) {
    if (rows() >= max_) return false;
    int d = add_row();
    ++defined_;
    at(c, x) = d;
    at(d, x ^ 1) = c;
    return true;
  }

  Status process(int a) {
    for (const auto& r : rels_) {
      if (scan(a, r, true) == Status::full) return Status::full;
      if (!live(a)) return Status::ok;
    }
    for (int x = 0; x < cols_; ++x) {
      if (!live(a)) return Status::ok;
      if (at(a, x) < 0 && !define(a, x)) return Status::full;
    }
    return Status::ok;
  }

  Status scan(int a, const std::vector<int>& w, bool fill) {
    int f = a, b = a;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) >= 0) f = at(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != a) coincidence(f, a);
        return Status::ok;
      }
      while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0) b = at(b, w[static_cast<std::size_t>(j--)] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return Status::ok;
      }
      if (i == j) {
        at(f, w[static_cast<std::size_t>(i)]) = b;
        at(b, w[static_cast<std::size_t>(i)] ^ 1) = f;
        return Status::ok;
      }
      if (!fill) return Status::ok;
      if (!define(f, w[static_cast<std::size_t>(i)])) return Status::full;
    }
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int e = queue[qi];
      for (int x = 0; x < cols_; ++x) {
        int f = at(e, x);
        if (f < 0) continue;
        if (at(f, x ^ 1) == e) at(f, x ^ 1) = -1;
        int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, x ^ 1) >= 0) {
          merge(e1, at(f1, x ^ 1), queue);
        } else {
          at(e1, x) = f1;
          at(f1, x ^ 1) = e1;
        }
      }
    }
  }

  void lookahead() {
    for (int b = 0; b < rows(); ++b)
      for (const auto& r : rels_) {
        if (!live(b)) break;
        scan(b, r, false);
      }
  }

  // Renumbers live cosets consecutively; returns the new index of `keep`.
  int compact(int keep) {
    std::vector<int> map(parent_.size(), -1);
    int n = 0;
    for (int c = 0; c < rows(); ++c)
      if (live(c)) map[static_cast<std::size_t>(c)] = n++;
    std::vector<int> fresh(static_cast<std::size_t>(n) * static_cast<std::size_t>(cols_), -1);
    for (int c = 0; c < rows(); ++c) {
      if (!live(c)) continue;
      for (int x = 0; x < cols_; ++x) {
        int t = at(c, x);
        if (t >= 0) fresh[static_cast<std::size_t>(map[static_cast<std::size_t>(c)]) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(x)] = map[static_cast<std::size_t>(rep(t))];
      }
    }
    // A dead `keep` maps to its representative, which is harmless to rescan.
    int kept = map[static_cast<std::size_t>(rep(keep))];
    table_ = std::move(fresh);
    parent_.resize(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) parent_[static_cast<std::size_t>(c)] = c;
    return kept;
  }

  int cols_;
  std::int64_t max_;
  std::int64_t defined_ = 0;
  std::vector<std::vector<int>> rels_;
  std::vector<int> parent_;
  std::vector<int> table_;
};

}  // namespace

int CosetTable::act(int coset, int letter) const {
  return rows[static_cast<std::size_t>(coset)][static_cast<std::size_t>(column_of(letter))];
}

int CosetTable::trace(int coset, const Word& w) const {
  for (int x : w) coset = act(coset, x);
  return coset;
}

CosetResult coset_enumerate(const Presentation& pres, std::int64_t max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be positive");
  return Enumerator(pres, max_cosets).run();
}

}  // namespace joinpi
