#include "asf/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>

#include "asf/error.hpp"

namespace asf::kernels {

SmallField::SmallField(const FiniteField& field) : field_(field) {
  if (!field.order_fits() || field.order() > kMaxOrder) {
    raise(ErrorCode::FieldTooLarge, field.to_string() + " exceeds the small-field table limit");
  }
  q_ = static_cast<std::uint32_t>(field.order());
  p_ = field.characteristic();
  const int n = field.degree();

  std::vector<std::vector<std::uint32_t>> digits(q_, std::vector<std::uint32_t>(static_cast<std::size_t>(n)));
  for (std::uint32_t i = 0; i < q_; ++i) {
    std::uint32_t rest = i;
    for (int k = 0; k < n; ++k) {
      digits[i][static_cast<std::size_t>(k)] = rest % p_;
      rest /= p_;
    }
  }
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t idx = 0;
    for (int k = n; k-- > 0;) idx = idx * p_ + d[static_cast<std::size_t>(k)];
    return idx;
  };

  add_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  std::vector<std::uint32_t> d(static_cast<std::size_t>(n));
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (int k = 0; k < n; ++k) d[static_cast<std::size_t>(k)] = (p_ - digits[a][static_cast<std::size_t>(k)]) % p_;
    neg_[a] = encode(d);
    for (std::uint32_t b = 0; b < q_; ++b) {
      for (int k = 0; k < n; ++k) {
        d[static_cast<std::size_t>(k)] = (digits[a][static_cast<std::size_t>(k)] + digits[b][static_cast<std::size_t>(k)]) % p_;
      }
      add_[static_cast<std::size_t>(a) * q_ + b] = encode(d);
    }
  }

  // Discrete log tables from the least primitive element.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    const Element g = field.from_index(cand);
    Element x = field.one();
    std::uint32_t k = 0;
    bool primitive = true;
    for (; k < q_ - 1; ++k) {
      if (k > 0 && x.is_one()) {
        primitive = false;
        break;
      }
      exp_[k] = static_cast<Index>(x.index());
      x = x * g;
    }
    if (primitive) break;
  }
  for (std::uint32_t k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;

  wp_.resize(q_);
  for (Index x = 0; x < q_; ++x) wp_[x] = sub(frob(x), x);
}

std::vector<std::int64_t> least_preimages(std::span<const Index> table, std::uint32_t order, Exec exec) {
  std::vector<std::int64_t> out(order, -1);
  const auto domain = static_cast<std::int64_t>(table.size());
  auto scan = [&](std::int64_t y) {
    for (std::int64_t x = 0; x < domain; ++x) {
      if (table[static_cast<std::size_t>(x)] == y) {
        out[static_cast<std::size_t>(y)] = x;
        return;
      }
    }
  };
  const auto n = static_cast<std::int64_t>(order);
  if (exec == Exec::Serial) {
    for (std::int64_t y = 0; y < n; ++y) scan(y);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t y = 0; y < n; ++y) scan(y);
  }
  return out;
}

std::vector<Index> additive_values(const SmallField& f, std::span<const Index> coeffs, Exec exec) {
  const auto q = static_cast<std::int64_t>(f.order());
  std::vector<Index> out(static_cast<std::size_t>(q));
  auto eval = [&](std::int64_t xi) {
    Index x = static_cast<Index>(xi);
    Index acc = 0;
    for (Index c : coeffs) {
      acc = f.add(acc, f.mul(c, x));
      x = f.frob(x);
    }
    out[static_cast<std::size_t>(xi)] = acc;
  };
  if (exec == Exec::Serial) {
    for (std::int64_t x = 0; x < q; ++x) eval(x);
  } else {
#pragma omp parallel for
    for (std::int64_t x = 0; x < q; ++x) eval(x);
  }
  return out;
}

Subset scaled_wp_image(const SmallField& f, Index a, Exec exec) {
  const auto q = static_cast<std::int64_t>(f.order());
  std::vector<Index> vals(static_cast<std::size_t>(q));
  if (exec == Exec::Serial) {
    for (std::int64_t x = 0; x < q; ++x) vals[static_cast<std::size_t>(x)] = f.mul(a, f.wp(static_cast<Index>(x)));
  } else {
#pragma omp parallel for
    for (std::int64_t x = 0; x < q; ++x) vals[static_cast<std::size_t>(x)] = f.mul(a, f.wp(static_cast<Index>(x)));
  }
  Subset mask(static_cast<std::size_t>(q), 0);
  for (Index v : vals) mask[v] = 1;
  return mask;
}

Subset scaled_wp_intersection(const SmallField& f, std::span<const Index> tuple, Exec exec) {
  const auto q = static_cast<std::int64_t>(f.order());
  Subset mask(static_cast<std::size_t>(q), 0);
  auto member = [&](std::int64_t t) {
    for (Index a : tuple) {
      bool hit = false;
      for (Index x = 0; x < f.order() && !hit; ++x) hit = f.mul(a, f.wp(x)) == t;
      if (!hit) return;
    }
    mask[static_cast<std::size_t>(t)] = 1;
  };
  if (exec == Exec::Serial) {
    for (std::int64_t t = 0; t < q; ++t) member(t);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t t = 0; t < q; ++t) member(t);
  }
  return mask;
}

namespace {

std::vector<std::vector<Index>> wp_fibers(const SmallField& f) {
  std::vector<std::vector<Index>> pre(f.order());
  for (Index x = 0; x < f.order(); ++x) pre[f.wp(x)].push_back(x);
  return pre;
}

void emit_fiber_product(Index t, const std::vector<const std::vector<Index>*>& fibers, std::vector<Index>& out) {
  const std::size_t n = fibers.size();
  std::vector<std::size_t> pos(n, 0);
  for (;;) {
    out.push_back(t);
    for (std::size_t i = 0; i < n; ++i) out.push_back((*fibers[i])[pos[i]]);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++pos[k] < fibers[k]->size()) break;
      pos[k] = 0;
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

std::vector<Index> ga_points(const SmallField& f, std::span<const Index> tuple, Exec exec) {
  const auto pre = wp_fibers(f);
  const auto q = static_cast<std::int64_t>(f.order());
  std::vector<std::vector<Index>> per_t(static_cast<std::size_t>(q));
  auto fill = [&](std::int64_t ti) {
    const auto t = static_cast<Index>(ti);
    std::vector<const std::vector<Index>*> fibers;
    for (Index a : tuple) {
      const auto& fib = pre[f.mul(t, f.inv(a))];
      if (fib.empty()) return;
      fibers.push_back(&fib);
    }
    emit_fiber_product(t, fibers, per_t[static_cast<std::size_t>(ti)]);
  };
  if (exec == Exec::Serial) {
    for (std::int64_t t = 0; t < q; ++t) fill(t);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t t = 0; t < q; ++t) fill(t);
  }
  std::vector<Index> out;
  for (auto& v : per_t) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::uint64_t ga_point_count(const SmallField& f, std::span<const Index> tuple, Exec exec) {
  std::vector<std::uint64_t> fiber_size(f.order(), 0);
  for (Index x = 0; x < f.order(); ++x) ++fiber_size[f.wp(x)];
  const auto q = static_cast<std::int64_t>(f.order());
  std::uint64_t total = 0;
  auto count = [&](std::int64_t ti) {
    std::uint64_t prod = 1;
    for (Index a : tuple) prod *= fiber_size[f.mul(static_cast<Index>(ti), f.inv(a))];
    return prod;
  };
  if (exec == Exec::Serial) {
    for (std::int64_t t = 0; t < q; ++t) total += count(t);
  } else {
#pragma omp parallel for reduction(+ : total)
    for (std::int64_t t = 0; t < q; ++t) total += count(t);
  }
  return total;
}

namespace {

using Bits = std::bitset<SmallField::kMaxOrder>;

// Calls visit(combo) for every k-combination of {lo..m-1} appended to prefix.
template <class Visit>
bool for_each_combination(int lo, int m, int k, std::vector<int>& combo, Visit&& visit) {
  if (k == 0) return visit(combo);
  for (int i = lo; i <= m - k; ++i) {
    combo.push_back(i);
    const bool go_on = for_each_combination(i + 1, m, k - 1, combo, visit);
    combo.pop_back();
    if (!go_on) return false;
  }
  return true;
}

bool stable_combination(const std::vector<Bits>& images, const std::vector<int>& combo) {
  Bits all;
  all.set();
  for (int i : combo) all &= images[static_cast<std::size_t>(i)];
  for (std::size_t skip = 0; skip < combo.size(); ++skip) {
    Bits sub;
    sub.set();
    for (std::size_t j = 0; j < combo.size(); ++j) {
      if (j != skip) sub &= images[static_cast<std::size_t>(combo[j])];
    }
    if (sub == all) return true;
  }
  return false;
}

}  // namespace

int baldwin_saxl_index(const SmallField& f, std::span<const Index> units, Exec exec) {
  if (units.empty()) raise(ErrorCode::InvalidArgument, "Baldwin-Saxl needs a nonempty family");
  std::vector<Index> distinct(units.begin(), units.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.front() == 0) raise(ErrorCode::InvalidArgument, "Baldwin-Saxl family must consist of units");

  const int m = static_cast<int>(distinct.size());
  std::vector<Bits> images(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto mask = scaled_wp_image(f, distinct[static_cast<std::size_t>(i)], Exec::Serial);
    for (std::size_t x = 0; x < mask.size(); ++x) images[static_cast<std::size_t>(i)][x] = mask[x] != 0;
  }

  for (int n = 1;; ++n) {
    const int k = n + 1;
    if (k > m) return n;
    std::atomic<bool> ok{true};
    auto check_from = [&](int first) {
      if (!ok.load(std::memory_order_relaxed)) return;
      std::vector<int> combo{first};
      for_each_combination(first + 1, m, k - 1, combo, [&](const std::vector<int>& c) {
        if (!stable_combination(images, c)) {
          ok.store(false, std::memory_order_relaxed);
          return false;
        }
        return ok.load(std::memory_order_relaxed);
      });
    };
    if (exec == Exec::Serial) {
      for (int first = 0; first <= m - k; ++first) check_from(first);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
      for (int first = 0; first <= m - k; ++first) check_from(first);
    }
    if (ok.load()) return n;
  }
}

namespace {

PolyFp poly_from_code(std::uint32_t p, std::uint64_t code, int deg_bound) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(deg_bound) + 1);
  for (auto& slot : c) {
    slot = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return PolyFp(p, std::move(c));
}

PolyFp pow_poly(PolyFp base, std::uint32_t e) {
  PolyFp result = PolyFp::constant(base.characteristic(), 1);
  for (std::uint32_t i = 0; i < e; ++i) result = result * base;
  return result;
}

}  // namespace

std::optional<std::pair<PolyFp, PolyFp>> rational_inverse_search(std::uint32_t p, int deg_bound, Exec exec) {
  if (!is_prime(p)) raise(ErrorCode::NotPrime, std::to_string(p));
  if (deg_bound < 1) raise(ErrorCode::InvalidArgument, "degree bound must be >= 1");
  std::uint64_t count = 1;
  for (int i = 0; i <= deg_bound; ++i) count *= p;
  const PolyFp x = PolyFp::x(p);

  std::vector<std::int64_t> first_h(count, -1);
  auto search_g = [&](std::int64_t gcode) {
    const PolyFp g = poly_from_code(p, static_cast<std::uint64_t>(gcode), deg_bound);
    const PolyFp gp = pow_poly(g, p);
    const PolyFp gp1 = pow_poly(g, p - 1);
    for (std::uint64_t hcode = 0; hcode < count; ++hcode) {
      const PolyFp h = poly_from_code(p, hcode, deg_bound);
      if (g.degree() <= 0 && h.degree() <= 0) continue;  // h/g in F_p
      if (gcd(g, h).degree() != 0) continue;
      if (x * (pow_poly(h, p) - h * gp1) == gp) {
        first_h[static_cast<std::size_t>(gcode)] = static_cast<std::int64_t>(hcode);
        return;
      }
    }
  };
  const auto n = static_cast<std::int64_t>(count);
  if (exec == Exec::Serial) {
    for (std::int64_t g = 1; g < n; ++g) search_g(g);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t g = 1; g < n; ++g) search_g(g);
  }
  for (std::int64_t g = 1; g < n; ++g) {
    if (first_h[static_cast<std::size_t>(g)] >= 0) {
      return std::make_pair(poly_from_code(p, static_cast<std::uint64_t>(g), deg_bound),
                            poly_from_code(p, static_cast<std::uint64_t>(first_h[static_cast<std::size_t>(g)]), deg_bound));
    }
  }
  return std::nullopt;
}

}  // namespace asf::kernels
