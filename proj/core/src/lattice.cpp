#include "latpoly/lattice.hpp"

#include <functional>

#include "latpoly/errors.hpp"

namespace latpoly {

std::string GridPosition::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

LatticePath LatticePath::parse(std::string_view text) {
  LatticePath path;
  for (std::size_t idx = 0; idx < text.size(); ++idx) {
    char c = text[idx];
    if (c != 'E' && c != 'N') {
      throw ParseError("invalid path character '" + std::string(1, c) + "' at step " + std::to_string(idx));
    }
    Step s = static_cast<Step>(c);
    if (!path.can_take(s)) {
      throw ParseError("step " + std::to_string(idx) + " goes above the line x=2y (to " +
                       path.end_.after(s).to_string() + ")");
    }
    path.steps_.push_back(s);
    path.end_ = path.end_.after(s);
  }
  return path;
}

void LatticePath::push_back(Step s) {
  if (!can_take(s)) {
    throw DomainError("step " + std::to_string(steps_.size()) + " goes above the line x=2y (to " +
                      end_.after(s).to_string() + ")");
  }
  steps_.push_back(s);
  end_ = end_.after(s);
}

void LatticePath::pop_back() {
  if (steps_.empty()) return;
  if (steps_.back() == Step::East) {
    --end_.i;
  } else {
    --end_.j;
  }
  steps_.pop_back();
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

int weight_exponent(const LatticePath& path) {
  int x = 0;
  int weight = 0;
  for (Step s : path.steps()) {
    if (s == Step::East) {
      ++x;
    } else if (x % 2 == 1) {
      ++weight;
    }
  }
  return weight;
}

LatticeTable::LatticeTable(int max_i) : max_i_(max_i) {
  if (max_i < 0) throw DomainError("lattice table size must be nonnegative");
  rows_.resize(static_cast<std::size_t>(max_i) + 1);
  for (int i = 0; i <= max_i; ++i) {
    auto& row = rows_[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(i / 2) + 1);
    for (int j = 0; j <= i / 2; ++j) {
      if (i == 0 && j == 0) {
        row[0] = Poly{1};
        continue;
      }
      try {
        // last step east from (i-1, j), or north from (i, j-1) with weight x at odd i
        Poly value = at({i - 1, j});
        if (j > 0) {
          const Poly& below = row[static_cast<std::size_t>(j - 1)];
          value += (i % 2 == 1) ? below.shift_mul_x() : below;
        }
        row[static_cast<std::size_t>(j)] = std::move(value);
      } catch (const ArithmeticOverflow& e) {
        throw ArithmeticOverflow("overflow computing L at " + GridPosition{i, j}.to_string() + ": " + e.what());
      }
    }
  }
}

const Poly& LatticeTable::at(GridPosition pos) const {
  static const Poly kZero;
  if (!pos.on_or_below_line()) return kZero;
  if (pos.i > max_i_) {
    throw DomainError("position " + pos.to_string() + " outside table of size " + std::to_string(max_i_));
  }
  return rows_[static_cast<std::size_t>(pos.i)][static_cast<std::size_t>(pos.j)];
}

Poly lattice_poly(GridPosition pos) {
  if (!pos.on_or_below_line()) return {};
  return LatticeTable(pos.i).at(pos);
}

std::vector<LatticePath> enumerate_paths(GridPosition pos) {
  std::vector<LatticePath> out;
  if (!pos.on_or_below_line()) return out;
  LatticePath current;
  std::function<void()> descend = [&] {
    GridPosition at = current.endpoint();
    if (at == pos) {
      out.push_back(current);
      return;
    }
    for (Step s : {Step::East, Step::North}) {
      GridPosition next = at.after(s);
      if (next.i > pos.i || next.j > pos.j || !current.can_take(s)) continue;
      current.push_back(s);
      descend();
      current.pop_back();
    }
  };
  descend();
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int t = 1; t <= k; ++t) {
    // r * (n - k + t) is divisible by t since r * (n-k+t) / t = C(n-k+t, t)
    r = checked::mul(r, n - k + t) / t;
  }
  return r;
}

std::int64_t t_coeff(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) {
    throw DomainError("t_coeff requires n >= 1 and 0 <= k <= n-1, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  std::int64_t numerator = checked::mul(binomial(n - 1 + k, n - 1), binomial(2 * n - k, n + 1));
  if (numerator % n != 0) {
    throw std::logic_error("t_coeff: inexact division for n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return numerator / n;
}

std::int64_t catalan3(int n) {
  if (n < 0) throw DomainError("catalan3 requires n >= 0");
  std::int64_t c = binomial(3 * n, n);
  if (c % (2 * n + 1) != 0) throw std::logic_error("catalan3: inexact division");
  return c / (2 * n + 1);
}

Poly descent_formula(int n) {
  if (n < 2) throw DomainError("descent_formula requires n >= 2, got " + std::to_string(n));
  std::vector<Poly::Coeff> coeffs;
  for (int k = 0; k <= n - 2; ++k) {
    std::int64_t numerator = checked::mul(binomial(n - 2 + k, n - 2), binomial(2 * n - 2 - k, n));
    if (numerator % (n - 1) != 0) {
      throw std::logic_error("descent_formula: inexact division at k=" + std::to_string(k));
    }
    coeffs.push_back(numerator / (n - 1));
  }
  return Poly(std::move(coeffs));
}

}  // namespace latpoly
