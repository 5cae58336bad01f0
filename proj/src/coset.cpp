#include "parafree/coset.hpp"

#include <algorithm>
#include <deque>

#include "parafree/errors.hpp"

namespace parafree {

Presentation Presentation::make(Alphabet alphabet, std::vector<Word> relators) {
  for (const Word& r : relators) {
    if (r.alphabet() != alphabet)
      throw AlphabetError("relator uses a different alphabet");
    if (r.is_identity())
      throw Error("empty relator (trivial after free reduction)");
  }
  return Presentation{std::move(alphabet), std::move(relators)};
}

CosetTable::CosetTable(int ngens, int ncosets, std::vector<int> entries,
                       bool closed)
    : ngens_(ngens), ncosets_(ncosets), entries_(std::move(entries)),
      closed_(closed) {}

int CosetTable::apply(int coset, const Word& w) const {
  int c = coset;
  for (const Syllable& s : w.syllables()) {
    bool inv = s.exp < 0;
    std::int64_t n = inv ? -s.exp : s.exp;
    for (std::int64_t i = 0; i < n && c >= 0; ++i) c = step(c, s.gen, inv);
  }
  return c;
}

bool CosetTable::is_permutation_representation() const {
  for (int col = 0; col < 2 * ngens_; ++col) {
    std::vector<bool> hit(ncosets_, false);
    for (int c = 0; c < ncosets_; ++c) {
      int d = entries_[static_cast<std::size_t>(c) * 2 * ngens_ + col];
      if (d < 0 || d >= ncosets_ || hit[d]) return false;
      hit[d] = true;
    }
  }
  // Generator and inverse columns must be mutually inverse maps.
  for (int c = 0; c < ncosets_; ++c)
    for (int g = 0; g < ngens_; ++g)
      if (step(step(c, g), g, true) != c) return false;
  return true;
}

bool CosetTable::fixes_all_cosets(const Word& w) const {
  for (int c = 0; c < ncosets_; ++c)
    if (apply(c, w) != c) return false;
  return true;
}

namespace {

// Column encoding: generator g forward = 2g, inverse = 2g+1; x^-1 = x^1.
std::vector<int> word_columns(const Word& w) {
  std::vector<int> cols;
  cols.reserve(static_cast<std::size_t>(w.letter_length()));
  for (const Syllable& s : w.syllables()) {
    int col = 2 * s.gen + (s.exp < 0 ? 1 : 0);
    std::int64_t n = s.exp < 0 ? -s.exp : s.exp;
    for (std::int64_t i = 0; i < n; ++i) cols.push_back(col);
  }
  return cols;
}

class Enumerator {
 public:
  Enumerator(const Presentation& pres, const std::vector<Word>& subgroup_gens,
             int max_cosets)
      : ngens_(pres.alphabet.size()), ncols_(2 * pres.alphabet.size()),
        max_cosets_(max_cosets) {
    if (max_cosets < 1) throw Error("max_cosets must be >= 1");
    for (const Word& r : pres.relators) relators_.push_back(word_columns(r));
    for (const Word& u : subgroup_gens) {
      if (u.alphabet() != pres.alphabet)
        throw AlphabetError("subgroup generator uses a different alphabet");
      subgens_.push_back(word_columns(u));
    }
    new_coset();  // coset 0 = the subgroup
  }

  CosetTable run() {
    for (bool done = false; !done;) {
      try {
        for (const auto& u : subgens_) scan_and_fill(0, u);
        done = true;
      } catch (const TableFull&) {
        lookahead();
        compact(0);
        if (alloc() >= max_cosets_) limit_error();
      }
    }
    int alpha = 0;
    while (alpha < alloc()) {
      if (!live(alpha)) {
        ++alpha;
        continue;
      }
      try {
        for (const auto& r : relators_) {
          scan_and_fill(alpha, r);
          if (!live(alpha)) break;
        }
        if (live(alpha))
          for (int col = 0; col < ncols_; ++col)
            if (at(alpha, col) < 0) define(alpha, col);
        ++alpha;
      } catch (const TableFull&) {
        // Lookahead: scan everything without defining, harvesting the
        // coincidences, then reclaim the rows of dead cosets. The coset
        // being scanned is rescanned afterwards.
        lookahead();
        alpha = compact(alpha);
        if (alloc() >= max_cosets_) limit_error();
      }
    }
    return compress();
  }

 private:
  struct TableFull {};

  [[noreturn]] void limit_error() const {
    throw ResourceLimitError(
        "coset limit exceeded (" + std::to_string(max_cosets_) +
        "); enumeration inconclusive");
  }

  int alloc() const { return static_cast<int>(parent_.size()); }
  bool live(int c) const { return parent_[c] == c; }
  int& at(int c, int col) {
    return table_[static_cast<std::size_t>(c) * ncols_ + col];
  }

  int rep(int k) {
    int l = k;
    while (parent_[l] != l) l = parent_[l];
    while (parent_[k] != l) {
      int next = parent_[k];
      parent_[k] = l;
      k = next;
    }
    return l;
  }

  int new_coset() {
    if (alloc() >= max_cosets_) {
      if (live_ >= max_cosets_) limit_error();
      throw TableFull{};
    }
    parent_.push_back(alloc());
    table_.resize(table_.size() + ncols_, -1);
    ++live_;
    return alloc() - 1;
  }

  void lookahead() {
    for (int c = 0; c < alloc(); ++c) {
      if (!live(c)) continue;
      for (const auto& r : relators_) {
        scan_only(c, r);
        if (!live(c)) break;
      }
    }
  }

  // Renumbers live cosets, dropping dead rows; returns the new index to
  // resume scanning from.
  int compact(int cursor) {
    std::vector<int> index(alloc(), -1);
    int n = 0;
    for (int c = 0; c < alloc(); ++c)
      if (live(c)) index[c] = n++;
    for (int c = 0; c < alloc(); ++c) {
      if (!live(c)) continue;
      for (int col = 0; col < ncols_; ++col) {
        int d = at(c, col);
        table_[static_cast<std::size_t>(index[c]) * ncols_ + col] =
            d < 0 ? -1 : index[rep(d)];
      }
    }
    int resumed = index[rep(cursor)];
    table_.resize(static_cast<std::size_t>(n) * ncols_);
    parent_.resize(n);
    for (int c = 0; c < n; ++c) parent_[c] = c;
    live_ = n;
    return resumed;
  }

  int define(int alpha, int col) {
    int beta = new_coset();
    at(alpha, col) = beta;
    at(beta, col ^ 1) = alpha;
    return beta;
  }

  void merge(int k, int l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    --live_;
    queue_.push_back(l);
  }

  // Holt-style coincidence processing: redistribute the rows of dead cosets
  // onto their representatives, queuing any further identifications.
  void coincidence(int alpha, int beta) {
    merge(alpha, beta);
    while (!queue_.empty()) {
      int gamma = queue_.front();
      queue_.pop_front();
      for (int col = 0; col < ncols_; ++col) {
        int delta = at(gamma, col);
        if (delta < 0) continue;
        at(delta, col ^ 1) = -1;
        int mu = rep(gamma);
        int nu = rep(delta);
        if (at(mu, col) >= 0) {
          merge(nu, at(mu, col));
        } else if (at(nu, col ^ 1) >= 0) {
          merge(mu, at(nu, col ^ 1));
        } else {
          at(mu, col) = nu;
          at(nu, col ^ 1) = mu;
        }
      }
    }
  }

  void scan_and_fill(int alpha, const std::vector<int>& w) {
    if (w.empty()) return;
    for (;;) {
      int f = alpha;
      std::size_t i = 0;
      while (i < w.size() && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i == w.size()) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      int b = alpha;
      std::size_t j = w.size();
      while (j > i && at(b, w[j - 1] ^ 1) >= 0) b = at(b, w[--j] ^ 1);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1) = f;
        return;
      }
      define(f, w[i]);  // fill lowest undefined entry, then rescan
    }
  }

  // Scan without defining: only deductions and coincidences.
  void scan_only(int alpha, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = alpha;
    std::size_t i = 0;
    while (i < w.size() && at(f, w[i]) >= 0) f = at(f, w[i++]);
    if (i == w.size()) {
      if (f != alpha) coincidence(f, alpha);
      return;
    }
    int b = alpha;
    std::size_t j = w.size();
    while (j > i && at(b, w[j - 1] ^ 1) >= 0) b = at(b, w[--j] ^ 1);
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      at(f, w[i]) = b;
      at(b, w[i] ^ 1) = f;
    }
  }

  CosetTable compress() {
    std::vector<int> index(alloc(), -1);
    int n = 0;
    for (int c = 0; c < alloc(); ++c)
      if (live(c)) index[c] = n++;
    std::vector<int> entries(static_cast<std::size_t>(n) * ncols_, -1);
    for (int c = 0; c < alloc(); ++c) {
      if (!live(c)) continue;
      for (int col = 0; col < ncols_; ++col) {
        int d = at(c, col);
        entries[static_cast<std::size_t>(index[c]) * ncols_ + col] =
            d < 0 ? -1 : index[rep(d)];
      }
    }
    return CosetTable(ngens_, n, std::move(entries), true);
  }

  int ngens_;
  int ncols_;
  int max_cosets_;
  int live_ = 0;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgens_;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::deque<int> queue_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& pres,
                        const std::vector<Word>& subgroup_gens,
                        int max_cosets) {
  Enumerator e(pres, subgroup_gens, max_cosets);
  CosetTable t = e.run();
  // A finished enumeration must be a permutation representation in which
  // all relators act trivially and the subgroup generators fix coset 0.
  if (!t.is_permutation_representation())
    throw Error("internal error: enumeration produced an inconsistent table");
  for (const Word& r : pres.relators)
    if (!t.fixes_all_cosets(r))
      throw Error("internal error: relator does not act trivially");
  for (const Word& u : subgroup_gens)
    if (t.apply(0, u) != 0)
      throw Error("internal error: subgroup generator moves coset 0");
  return t;
}

std::int64_t quotient_order(const Presentation& pres,
                            const std::vector<Word>& extra_relators,
                            int max_cosets) {
  return quotient_table(pres, extra_relators, max_cosets).size();
}

CosetTable quotient_table(const Presentation& pres,
                          const std::vector<Word>& extra_relators,
                          int max_cosets) {
  std::vector<Word> relators = pres.relators;
  for (const Word& r : extra_relators) {
    if (r.alphabet() != pres.alphabet)
      throw AlphabetError("extra relator uses a different alphabet");
    if (!r.is_identity()) relators.push_back(r);
  }
  Presentation q = Presentation::make(pres.alphabet, std::move(relators));
  return todd_coxeter(q, {}, max_cosets);
}

bool word_is_identity_in_quotient(const CosetTable& table, const Word& w) {
  if (!table.closed()) throw Error("coset table is not closed");
  return table.fixes_all_cosets(w);
}

}  // namespace parafree
