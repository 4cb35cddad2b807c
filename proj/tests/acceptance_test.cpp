// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pantsbd/coordinates.hpp"
#include "pantsbd/errors.hpp"
#include "pantsbd/veronese.hpp"
#include "support/test_support.hpp"

namespace {

using namespace pantsbd;
using pantsbd::testing::Rng;
using pantsbd::testing::sample_params;

struct Outcome {
  bool ok = true;
  std::string detail;
  long checks = 0;

  /// Records one comparison; keeps the first failure message.
  void expect(bool cond, const std::function<std::string()>& what) {
    ++checks;
    if (cond || !ok) {
      if (!cond) ok = false;
      return;
    }
    ok = false;
    detail = what();
  }
};

std::string show(const PantsParams& p) {
  return "(" + p.alpha.to_string() + ", " + p.beta.to_string() + ", " + p.gamma.to_string() + ")";
}

std::vector<double> length_grid() {
  std::vector<double> g;
  for (int i = 0; i < 5; ++i) g.push_back(0.5 + 2.5 * i / 4.0);
  return g;
}

std::map<Boundary, Mat2> generators(const PantsRep& rep) {
  return {{Boundary::a, rep.a}, {Boundary::b, rep.b}, {Boundary::c, rep.c}};
}

Outcome oracle_equivalence() {
  Outcome out;
  Rng rng(101);
  for (int s = 0; s < 25; ++s) {
    const PantsParams p = rng.params();
    for (int n = 2; n <= 7; ++n) {
      for (Leaf leaf : kLeaves) {
        for (int k = 1; k < n; ++k) {
          const Scalar cf = cf_sigma(n, p, leaf, k).exp_value;
          const Scalar gen = shearing_invariant_generic(n, p, leaf, k).exp_value;
          out.expect(cf == gen, [&] {
            return std::string(name(leaf)) + " n=" + std::to_string(n) + " p=" + std::to_string(k) +
                   " params=" + show(p) + ": " + cf.to_string() + " vs " + gen.to_string();
          });
        }
      }
      for (Triangle t : kTriangles) {
        for (const auto& idx : triple_indices(n)) {
          const Scalar cf = cf_tau(n, p, t, idx).exp_value;
          const Scalar gen = triangle_invariant_generic(n, p, t, idx).exp_value;
          out.expect(cf == gen, [&] {
            return std::string(name(t)) + " n=" + std::to_string(n) + " (" + idx.key() + ") params=" +
                   show(p) + ": " + cf.to_string() + " vs " + gen.to_string();
          });
        }
      }
    }
  }
  return out;
}

Outcome classical_shear() {
  Outcome out;
  for (double la : length_grid()) {
    for (double lb : length_grid()) {
      for (double lc : length_grid()) {
        const PantsParams p = params_from_lengths({la, lb, lc});
        const double want[] = {(la + lb - lc) / 2, (lb + lc - la) / 2, (lc + la - lb) / 2};
        for (Method m : {Method::generic, Method::closed_form}) {
          const CoordinateVector coords = assemble_phi(2, p, m);
          for (std::size_t i = 0; i < 3; ++i) {
            const double got = *coords.sigma_at(kLeaves[i], 1).log_value();
            out.expect(std::abs(got - want[i]) <= 1e-10, [&] {
              std::ostringstream os;
              os.precision(17);
              os << name(kLeaves[i]) << " at (" << la << ", " << lb << ", " << lc << "): " << got << " vs "
                 << want[i];
              return os.str();
            });
          }
        }
      }
    }
  }
  const double l2 = 2 * std::log(2.0);
  const CoordinateVector coords = assemble_phi(2, params_from_lengths({l2, l2, l2}), Method::closed_form);
  for (Leaf leaf : kLeaves) {
    const double got = *coords.sigma_at(leaf, 1).log_value();
    out.expect(std::abs(got - std::log(2.0)) <= 1e-10,
               [&] { return std::string(name(leaf)) + " at 2ln2: " + std::to_string(got); });
  }
  return out;
}

Outcome triangle_invariants_vanish() {
  Outcome out;
  Rng rng(303);
  const Scalar one = Scalar::one(Backend::exact);
  for (int s = 0; s < 25; ++s) {
    const PantsParams p = s == 0 ? sample_params() : rng.params();
    for (int n = 3; n <= 7; ++n) {
      for (Triangle t : kTriangles) {
        for (const auto& idx : triple_indices(n)) {
          const Scalar v = triangle_invariant_generic(n, p, t, idx).exp_value;
          out.expect(v == one, [&] {
            return std::string(name(t)) + " n=" + std::to_string(n) + " (" + idx.key() + ") params=" +
                   show(p) + ": " + v.to_string();
          });
        }
      }
    }
  }
  return out;
}

Outcome length_identity() {
  Outcome out;
  Rng rng(404);
  for (int s = 0; s < 25; ++s) {
    const PantsParams p = s == 0 ? sample_params() : rng.params();
    const auto gens = generators(build_rep(p));
    for (int n = 2; n <= 7; ++n) {
      const CoordinateVector coords = assemble_phi(n, p, Method::closed_form);
      for (Boundary b : kBoundaries) {
        const std::vector<Scalar> ratios = eigen_ratios(gens.at(b), n);
        for (int k = 1; k < n; ++k) {
          const Scalar r = boundary_sum_r(coords, b, k).exp_value;
          const Scalar& want = ratios[static_cast<std::size_t>(k - 1)];
          out.expect(r == want, [&] {
            return "boundary " + std::string(name(b)) + " n=" + std::to_string(n) + " p=" + std::to_string(k) +
                   " params=" + show(p) + ": " + r.to_string() + " vs " + want.to_string();
          });
          if (s == 0) {
            out.expect(r == Scalar::rational(4), [&] { return "sample point value " + r.to_string(); });
          }
        }
      }
    }
  }
  return out;
}

Outcome positivity() {
  Outcome out;
  Rng rng(505);
  const Scalar zero = Scalar::zero(Backend::exact);
  const Scalar one = Scalar::one(Backend::exact);
  for (int s = 0; s < 100; ++s) {
    const PantsParams p = rng.params();
    for (int n = 2; n <= 6; ++n) {
      const CoordinateVector coords = assemble_phi(n, p, Method::closed_form);
      auto where = [&] { return "n=" + std::to_string(n) + " params=" + show(p); };
      for (const auto& [leaf, values] : coords.sigma) {
        for (const auto& v : values) out.expect(v.exp_value > zero, [&] { return "sigma " + where(); });
      }
      for (const auto& [t, values] : coords.tau) {
        for (const auto& [idx, v] : values) out.expect(v.exp_value > zero, [&] { return "tau " + where(); });
      }
      for (Boundary b : kBoundaries) {
        for (int k = 1; k < n; ++k) {
          out.expect(boundary_sum_r(coords, b, k).exp_value > one,
                     [&] { return "R_" + std::to_string(k) + " boundary " + std::string(name(b)) + " " + where(); });
        }
      }
      out.expect(polytope_check(coords, p).all_passed(), [&] { return "polytope_check " + where(); });
    }
  }
  return out;
}

Outcome structural_relations() {
  Outcome out;
  Rng rng(606);
  const Scalar one = Scalar::one(Backend::exact);

  auto symmetries = [&](const Flag& e, const Flag& f, const Flag& g, const std::string& label) {
    const int n = static_cast<int>(e.dim());
    for (const auto& idx : triple_indices(n)) {
      const Scalar t = triple_ratio_exp(e, f, g, idx.p, idx.q, idx.r);
      out.expect(t == triple_ratio_exp(f, g, e, idx.q, idx.r, idx.p),
                 [&] { return "cyclic symmetry " + label + " (" + idx.key() + ")"; });
      out.expect(t * triple_ratio_exp(f, e, g, idx.q, idx.p, idx.r) == one,
                 [&] { return "transposition symmetry " + label + " (" + idx.key() + ")"; });
    }
  };

  // Random generic flag tuples.
  for (int s = 0; s < 50; ++s) {
    const int n = 3 + s % 4;
    for (;;) {
      const Flag e = rng.flag(n);
      const Flag f = rng.flag(n);
      const Flag g = rng.flag(n);
      if (!is_generic(std::vector<Flag>{e, f, g})) continue;
      symmetries(e, f, g, "random tuple " + std::to_string(s));
      break;
    }
  }

  // Pants generators.
  for (int s = 0; s < 10; ++s) {
    const PantsParams p = s == 0 ? sample_params() : rng.params();
    const auto gens = generators(build_rep(p));
    for (int n = 2; n <= 6; ++n) {
      const std::string where = "n=" + std::to_string(n) + " params=" + show(p);
      for (Triangle t : kTriangles) {
        const auto v = triangle_vertices(t, p);
        const Flag e = flag_curve(v[0], n);
        const Flag f = flag_curve(v[1], n);
        const Flag g = flag_curve(v[2], n);
        if (n >= 3) symmetries(e, f, g, std::string(name(t)) + " " + where);
      }
      const CoordinateVector coords = assemble_phi(n, p, Method::generic);
      const PolytopeReport report = polytope_check(coords, p);
      out.expect(report.find("triangle_rotation")->passed, [&] { return "rotation " + where; });

      for (const auto& [b, m] : gens) {
        const ProjPoint probe = ProjPoint::finite(rng.rational(-6, 6, 5));
        for (const ProjPoint& x : {ProjPoint::infinity(Backend::exact), probe}) {
          out.expect(same_flag(flag_curve(mobius_apply(m, x), n), flag_curve(x, n).transformed(sym_power(m, n))),
                     [&] { return "equivariance generator " + std::string(name(b)) + " " + where; });
        }
        out.expect(same_flag(flag_curve(fixed_points(m).attracting, n), stable_flag(m, n)),
                   [&] { return "stable flag generator " + std::string(name(b)) + " " + where; });
      }
    }
  }

  // Equivariance for random SL(2) elements.
  for (int s = 0; s < 50; ++s) {
    const int n = 2 + s % 5;
    const Mat2 m = rng.sl2();
    const ProjPoint x = ProjPoint::finite(rng.rational(-6, 6, 5));
    out.expect(same_flag(flag_curve(mobius_apply(m, x), n), flag_curve(x, n).transformed(sym_power(m, n))),
               [&] { return "equivariance random element " + std::to_string(s); });
  }
  return out;
}

Outcome dimension() {
  Outcome out;
  const PantsParams p = sample_params();
  for (int n = 2; n <= 10; ++n) {
    const std::size_t count = assemble_phi(n, p, Method::closed_form).entry_count();
    out.expect(count == static_cast<std::size_t>(n * n - 1),
               [&] { return "n=" + std::to_string(n) + " count " + std::to_string(count); });
  }
  return out;
}

Outcome pants_consistency() {
  Outcome out;
  Rng rng(808);
  const Scalar one = Scalar::one(Backend::exact);
  for (int s = 0; s < 25; ++s) {
    const PantsParams p = s == 0 ? sample_params() : rng.params();
    const PantsRep rep = build_rep(p);
    out.expect(rep.a * rep.b * rep.c == Mat2::identity(Backend::exact), [&] { return "abc != I at " + show(p); });
    const Scalar& al = p.alpha;
    const Scalar& be = p.beta;
    const Scalar& ga = p.gamma;
    const FixedPoints fa = fixed_points(rep.a);
    const FixedPoints fb = fixed_points(rep.b);
    const FixedPoints fc = fixed_points(rep.c);
    const bool formulas =
        fa.attracting.is_infinity() &&
        fa.repelling == ProjPoint::finite((al * al * be * ga + one) / (one - al * al)) &&
        fb.attracting == ProjPoint::finite(Scalar::zero(Backend::exact)) &&
        fb.repelling == ProjPoint::finite((ga - ga.inverse()) / (-be.inverse() - ga.inverse())) &&
        fc.attracting == ProjPoint::finite(one) &&
        fc.repelling == ProjPoint::finite((al * be + al.inverse() * ga.inverse()) /
                                          (al.inverse() * ga.inverse() + al.inverse() * be.inverse()));
    out.expect(formulas, [&] { return "fixed-point formulas at " + show(p); });
  }
  for (double la : length_grid()) {
    for (double lb : length_grid()) {
      for (double lc : length_grid()) {
        const PantsRep rep = build_rep(params_from_lengths({la, lb, lc}));
        const double tr = std::abs(rep.c.trace().to_double());
        const double want = 2 * std::cosh(lc / 2);
        out.expect(std::abs(tr - want) <= 1e-10 * std::max(1.0, want), [&] {
          std::ostringstream os;
          os.precision(17);
          os << "|tr c| at (" << la << ", " << lb << ", " << lc << "): " << tr << " vs " << want;
          return os.str();
        });
      }
    }
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "oracle equivalence, closed form vs generic, n=2..7", oracle_equivalence},
      {2, "n=2 classical shear coordinates", classical_shear},
      {3, "Fuchsian triangle invariants equal 1", triangle_invariants_vanish},
      {4, "length identity R_p = eigenvalue ratio", length_identity},
      {5, "positivity and length positivity", positivity},
      {6, "structural relations", structural_relations},
      {7, "coordinate count n^2 - 1", dimension},
      {8, "pants representation consistency", pants_consistency},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %d: %s (%ld checks, %.2fs)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.title,
                out.checks, secs, out.ok ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
    if (!out.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
