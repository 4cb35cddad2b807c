#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "pantsbd/coordinates.hpp"
#include "pantsbd/errors.hpp"
#include "pantsbd/veronese.hpp"

namespace pantsbd::cli {
namespace {

// Check categories in report order.
const char* const kCategories[] = {
    "domain",       "group_relation",        "fixed_points", "equivariance",
    "stable_flag",  "genericity",            "triple_ratio_symmetry",
    "rotation",     "constancy",             "oracle_equivalence",
    "length_identity", "positivity",
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  PantsParams params(Backend bk) {
    if (bk == Backend::floating) {
      return params_from_lengths({0.5 + 2.5 * unit(), 0.5 + 2.5 * unit(), 0.5 + 2.5 * unit()});
    }
    const std::int64_t da = uniform(1, 9);
    const std::int64_t db = uniform(1, 9);
    const std::int64_t dg = uniform(2, 11);
    const Scalar alpha = Scalar::rational(da + uniform(1, 4 * da), da);
    const Scalar beta = alpha.inverse() + Scalar::rational(uniform(1, 5 * db), db);
    return {alpha, beta, Scalar::rational(uniform(1, dg - 1), dg)};
  }

  /// A probe point on the projective line; float mode stays near the
  /// origin to keep the Veronese matrices well conditioned.
  Scalar point(Backend bk) {
    if (bk == Backend::floating) return Scalar::rational(uniform(-20, 20), 4).to_backend(bk);
    return Scalar::rational(uniform(-40, 40), uniform(1, 7));
  }

  /// Random integer flag. Invertibility is decided exactly.
  Flag flag(int n) {
    for (;;) {
      std::vector<VecN> basis(static_cast<std::size_t>(n));
      for (auto& v : basis) {
        for (int i = 0; i < n; ++i) v.push_back(Scalar::integer(uniform(-6, 6), Backend::exact));
      }
      if (!wedge_det(basis).is_zero()) return Flag(std::move(basis));
    }
  }

 private:
  std::mt19937_64 gen_;
};

struct Tally {
  long passed = 0;
  long failed = 0;
};

class Verifier {
 public:
  explicit Verifier(Backend bk) : bk_(bk) {
    for (const char* c : kCategories) tallies_[c];
  }

  void set_context(std::string context) { context_ = std::move(context); }

  bool agree(const Scalar& a, const Scalar& b) const {
    if (bk_ == Backend::exact) return a == b;
    const double x = a.to_double();
    const double y = b.to_double();
    return std::abs(x - y) <= 1e-8 * std::max({1.0, std::abs(x), std::abs(y)});
  }

  /// Runs a check that returns an empty string on success or a description
  /// of the mismatch.
  void check(const std::string& category, const std::function<std::string()>& body) {
    std::string problem;
    try {
      problem = body();
    } catch (const Error& e) {
      problem = std::string("exception: ") + e.what();
    }
    Tally& t = tallies_.at(category);
    if (problem.empty()) {
      ++t.passed;
      return;
    }
    ++t.failed;
    if (first_failure_.empty()) first_failure_ = category + " " + context_ + " " + problem;
  }

  /// Projective equality: u1 v2 == u2 v1, relative to the point sizes in
  /// float mode.
  bool same_point(const ProjPoint& x, const ProjPoint& y) const {
    if (bk_ == Backend::exact) return x == y;
    const double cross = x.u().to_double() * y.v().to_double() - x.v().to_double() * y.u().to_double();
    const double nx = std::hypot(x.u().to_double(), x.v().to_double());
    const double ny = std::hypot(y.u().to_double(), y.v().to_double());
    return std::abs(cross) <= 1e-8 * nx * ny;
  }

  std::string mismatch(const std::string& what, const Scalar& lhs, const Scalar& rhs) const {
    if (agree(lhs, rhs)) return {};
    return what + " lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
  }

  void report(std::ostream& out) const {
    long total = 0;
    long failed = 0;
    for (const char* c : kCategories) {
      const Tally& t = tallies_.at(c);
      std::string label = c;
      label.resize(24, ' ');
      out << label << t.passed << "/" << (t.passed + t.failed) << " passed\n";
      total += t.passed + t.failed;
      failed += t.failed;
    }
    out << "categories: " << std::size(kCategories) << ", checks: " << total << ", failures: " << failed
        << "\n";
    if (!first_failure_.empty()) out << "first counterexample: " << first_failure_ << "\n";
  }

  bool all_passed() const { return first_failure_.empty(); }

 private:
  Backend bk_;
  std::string context_;
  std::map<std::string, Tally> tallies_;
  std::string first_failure_;
};

Flag to_backend(const Flag& f, Backend bk) {
  std::vector<VecN> basis = f.basis();
  for (auto& v : basis) {
    for (auto& x : v) x = x.to_backend(bk);
  }
  return Flag(std::move(basis));
}

std::string params_string(const PantsParams& p) {
  return "params=(" + p.alpha.to_string() + "," + p.beta.to_string() + "," + p.gamma.to_string() + ")";
}

std::string index_string(const TripleIndex& idx) { return "index=(" + idx.key() + ")"; }

void check_sample_level(Verifier& v, const PantsParams& p) {
  const Backend bk = p.backend();
  v.check("domain", [&]() -> std::string {
    const DomainCheck* bad = check_domain(p).first_failure();
    return bad ? "failed " + bad->name : "";
  });
  const PantsRep rep = build_rep(p);
  v.check("group_relation", [&]() -> std::string {
    const Mat2 prod = rep.a * rep.b * rep.c;
    const Mat2 id = Mat2::identity(bk);
    for (const auto& [x, y] : {std::pair{&prod.a, &id.a}, std::pair{&prod.b, &id.b},
                               std::pair{&prod.c, &id.c}, std::pair{&prod.d, &id.d}}) {
      if (!v.agree(*x, *y)) return "abc != I";
    }
    return "";
  });

  const Scalar one = Scalar::one(bk);
  const Scalar& al = p.alpha;
  const Scalar& be = p.beta;
  const Scalar& ga = p.gamma;
  const ProjPoint one_point = ProjPoint::finite(one);
  const ProjPoint zero_point = ProjPoint::finite(Scalar::zero(bk));
  const ProjPoint inf_point = ProjPoint::infinity(bk);
  struct Expected {
    const Mat2* m;
    const ProjPoint& attracting;
    ProjPoint repelling;
  };
  const Expected expected[] = {
      {&rep.a, inf_point, ProjPoint::finite((al * al * be * ga + one) / (one - al * al))},
      {&rep.b, zero_point, ProjPoint::finite((ga - ga.inverse()) / (-be.inverse() - ga.inverse()))},
      {&rep.c, one_point,
       ProjPoint::finite((al * be + al.inverse() * ga.inverse()) /
                         (al.inverse() * ga.inverse() + al.inverse() * be.inverse()))},
  };
  for (const auto& e : expected) {
    v.check("fixed_points", [&]() -> std::string {
      const FixedPoints fp = fixed_points(*e.m);
      if (!v.same_point(fp.attracting, e.attracting)) {
        return "attracting point " + fp.attracting.to_string() + " expected " + e.attracting.to_string();
      }
      if (!v.same_point(fp.repelling, e.repelling)) {
        return "repelling point " + fp.repelling.to_string() + " expected " + e.repelling.to_string();
      }
      return "";
    });
  }
}

void check_dimension(Verifier& v, Sampler& rng, const PantsParams& p, int n) {
  const Backend bk = p.backend();
  const PantsRep rep = build_rep(p);
  const std::pair<Boundary, const Mat2*> gens[] = {
      {Boundary::a, &rep.a}, {Boundary::b, &rep.b}, {Boundary::c, &rep.c}};

  const ProjPoint probe = ProjPoint::finite(rng.point(bk));
  for (const auto& [boundary, g] : gens) {
    for (const ProjPoint& x : {ProjPoint::infinity(bk), ProjPoint::finite(Scalar::zero(bk)), probe}) {
      v.check("equivariance", [&]() -> std::string {
        const Flag lhs = flag_curve(mobius_apply(*g, x), n);
        const Flag rhs = flag_curve(x, n).transformed(sym_power(*g, n));
        return same_flag(lhs, rhs) ? "" : "generator " + std::string(name(boundary)) + " at x=" + x.to_string();
      });
    }
    v.check("stable_flag", [&]() -> std::string {
      const Flag curve = flag_curve(fixed_points(*g).attracting, n);
      return same_flag(curve, stable_flag(*g, n)) ? "" : "generator " + std::string(name(boundary));
    });
  }

  for (Triangle t : kTriangles) {
    v.check("genericity", [&]() -> std::string {
      std::vector<Flag> flags;
      for (const auto& x : triangle_vertices(t, p)) flags.push_back(flag_curve(x, n));
      return is_generic(flags) ? "" : "triangle " + std::string(name(t));
    });
  }
  for (Leaf leaf : kLeaves) {
    v.check("genericity", [&]() -> std::string {
      const LeafQuadruple lq = leaf_quadruple(leaf, p);
      const std::vector<Flag> flags{flag_curve(lq.terminal, n), flag_curve(lq.start, n),
                                    flag_curve(lq.left, n), flag_curve(lq.right, n)};
      return is_generic(flags) ? "" : "leaf " + std::string(name(leaf));
    });
  }

  if (n >= 3) {
    std::vector<std::array<Flag, 3>> triples;
    for (Triangle t : kTriangles) {
      const auto verts = triangle_vertices(t, p);
      triples.push_back({flag_curve(verts[0], n), flag_curve(verts[1], n), flag_curve(verts[2], n)});
    }
    for (;;) {
      std::array<Flag, 3> r{rng.flag(n), rng.flag(n), rng.flag(n)};
      if (is_generic(std::vector<Flag>{r[0], r[1], r[2]})) {
        triples.push_back({to_backend(r[0], bk), to_backend(r[1], bk), to_backend(r[2], bk)});
        break;
      }
    }
    for (const auto& [e, f, g] : triples) {
      for (const auto& idx : triple_indices(n)) {
        v.check("triple_ratio_symmetry", [&]() -> std::string {
          const Scalar t = triple_ratio_exp(e, f, g, idx.p, idx.q, idx.r);
          std::string m = v.mismatch("cyclic " + index_string(idx), t, triple_ratio_exp(f, g, e, idx.q, idx.r, idx.p));
          if (!m.empty()) return m;
          return v.mismatch("transposition " + index_string(idx),
                            t * triple_ratio_exp(f, e, g, idx.q, idx.p, idx.r), Scalar::one(bk));
        });
      }
    }
  }

  const CoordinateVector generic = assemble_phi(n, p, Method::generic);
  v.check("rotation", [&]() -> std::string {
    const PolytopeReport report = polytope_check(generic, p);
    const PolytopeCheck* rot = report.find("triangle_rotation");
    return rot && rot->passed ? "" : (rot ? rot->detail : "missing rotation check");
  });
  for (const auto& idx : triple_indices(n)) {
    v.check("constancy", [&]() -> std::string {
      return v.mismatch("T0 vs T1 " + index_string(idx), generic.tau_at(Triangle::t0, idx).exp_value,
                        generic.tau_at(Triangle::t1, idx).exp_value);
    });
  }
  for (Leaf leaf : kLeaves) {
    for (int k = 1; k < n; ++k) {
      v.check("oracle_equivalence", [&]() -> std::string {
        return v.mismatch(std::string(name(leaf)) + " p=" + std::to_string(k), cf_sigma(n, p, leaf, k).exp_value,
                          generic.sigma_at(leaf, k).exp_value);
      });
    }
  }
  for (Triangle t : kTriangles) {
    for (const auto& idx : triple_indices(n)) {
      v.check("oracle_equivalence", [&]() -> std::string {
        return v.mismatch(std::string(name(t)) + " " + index_string(idx), cf_tau(n, p, t, idx).exp_value,
                          generic.tau_at(t, idx).exp_value);
      });
    }
  }
  for (const auto& [boundary, g] : gens) {
    const std::vector<Scalar> ratios = eigen_ratios(*g, n);
    for (int k = 1; k < n; ++k) {
      v.check("length_identity", [&]() -> std::string {
        const std::string where = "boundary " + std::string(name(boundary)) + " p=" + std::to_string(k);
        const Scalar& want = ratios[static_cast<std::size_t>(k - 1)];
        std::string m = v.mismatch(where, boundary_sum_r(generic, boundary, k).exp_value, want);
        if (!m.empty()) return m;
        return v.mismatch(where + " (direct)", boundary_sum_r(n, p, boundary, k).exp_value, want);
      });
    }
  }
  v.check("positivity", [&]() -> std::string {
    for (const auto& c : polytope_check(generic).checks) {
      if (!c.passed) return c.name + ": " + c.detail;
    }
    return "";
  });
}

}  // namespace

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.max_n < 2) {
    err << "error: --max-n must be at least 2\n";
    return exit_code::usage;
  }
  if (config.samples < 1) {
    err << "error: --samples must be positive\n";
    return exit_code::usage;
  }
  const Backend bk = config.mode.value_or(Backend::exact);
  Sampler rng(config.seed);
  Verifier v(bk);
  for (int s = 0; s < config.samples; ++s) {
    const PantsParams p = rng.params(bk);
    v.set_context("sample=" + std::to_string(s) + " " + params_string(p));
    check_sample_level(v, p);
    for (int n = 2; n <= config.max_n; ++n) {
      v.set_context("sample=" + std::to_string(s) + " n=" + std::to_string(n) + " " + params_string(p));
      try {
        check_dimension(v, rng, p, n);
      } catch (const Error& e) {
        v.check("positivity", [&]() -> std::string { return std::string("exception: ") + e.what(); });
      }
    }
  }
  out << "verify: samples=" << config.samples << " seed=" << config.seed << " max_n=" << config.max_n
      << " mode=" << to_string(bk) << "\n";
  v.report(out);
  return v.all_passed() ? exit_code::ok : exit_code::verify_failed;
}

}  // namespace pantsbd::cli
