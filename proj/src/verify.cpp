#include "parafock/verify.hpp"

#include <thread>

namespace parafock {

std::string to_string(RelationFamily family) {
  switch (family) {
    case RelationFamily::parabose: return "parabose";
    case RelationFamily::parafermi: return "parafermi";
    case RelationFamily::mixed_bb_f: return "mixed_bb_f";
    case RelationFamily::mixed_ff_b: return "mixed_ff_b";
    case RelationFamily::mixed_fb_b: return "mixed_fb_b";
    case RelationFamily::mixed_bf_f: return "mixed_bf_f";
  }
  throw std::logic_error("unknown relation family");
}

namespace {

AlgebraElement b_gen(int s) {
  return AlgebraElement::generator(s > 0 ? Generator::b_plus : Generator::b_minus);
}
AlgebraElement f_gen(int s) {
  return AlgebraElement::generator(s > 0 ? Generator::f_plus : Generator::f_minus);
}
char sign_char(int s) { return s > 0 ? '+' : '-'; }

constexpr int kSigns[2] = {+1, -1};

}  // namespace

std::vector<Relation> enumerate_relations() {
  std::vector<Relation> rels;

  // [{b^xi, b^eta}, b^eps] = (eps - eta) b^xi + (eps - xi) b^eta.
  // The inner anticommutator is symmetric, so unordered pairs suffice.
  for (int xi : kSigns)
    for (int eta : kSigns) {
      if (xi < eta) continue;
      for (int eps : kSigns) {
        Relation r;
        r.family = RelationFamily::parabose;
        r.xi = xi;
        r.eta = eta;
        r.eps = eps;
        r.label = std::string("[{b") + sign_char(xi) + ",b" + sign_char(eta) + "},b" +
                  sign_char(eps) + "]";
        r.lhs = commutator(anticommutator(b_gen(xi), b_gen(eta)), b_gen(eps));
        r.rhs = Rational(eps - eta) * b_gen(xi) + Rational(eps - xi) * b_gen(eta);
        rels.push_back(std::move(r));
      }
    }

  // [[f^xi, f^eta], f^eps] = 1/2 (eps-eta)^2 f^xi - 1/2 (eps-xi)^2 f^eta.
  // The inner commutator is antisymmetric and vanishes for xi = eta, so
  // only the (+,-) pair carries content.
  for (int eps : kSigns) {
    Relation r;
    r.family = RelationFamily::parafermi;
    r.xi = +1;
    r.eta = -1;
    r.eps = eps;
    r.label = std::string("[[f+,f-],f") + sign_char(eps) + "]";
    r.lhs = commutator(commutator(f_gen(+1), f_gen(-1)), f_gen(eps));
    r.rhs = (Rational((eps + 1) * (eps + 1)) / 2) * f_gen(+1) -
            (Rational((eps - 1) * (eps - 1)) / 2) * f_gen(-1);
    rels.push_back(std::move(r));
  }

  // [{b^xi, b^eta}, f^eps] = 0.
  for (int xi : kSigns)
    for (int eta : kSigns) {
      if (xi < eta) continue;
      for (int eps : kSigns) {
        Relation r;
        r.family = RelationFamily::mixed_bb_f;
        r.xi = xi;
        r.eta = eta;
        r.eps = eps;
        r.label = std::string("[{b") + sign_char(xi) + ",b" + sign_char(eta) + "},f" +
                  sign_char(eps) + "]";
        r.lhs = commutator(anticommutator(b_gen(xi), b_gen(eta)), f_gen(eps));
        r.rhs = AlgebraElement::zero();
        rels.push_back(std::move(r));
      }
    }

  // [[f^xi, f^eta], b^eps] = 0.
  for (int eps : kSigns) {
    Relation r;
    r.family = RelationFamily::mixed_ff_b;
    r.xi = +1;
    r.eta = -1;
    r.eps = eps;
    r.label = std::string("[[f+,f-],b") + sign_char(eps) + "]";
    r.lhs = commutator(commutator(f_gen(+1), f_gen(-1)), b_gen(eps));
    r.rhs = AlgebraElement::zero();
    rels.push_back(std::move(r));
  }

  // [{f^xi, b^eta}, b^eps] = (eps - eta) f^xi.
  for (int xi : kSigns)
    for (int eta : kSigns)
      for (int eps : kSigns) {
        Relation r;
        r.family = RelationFamily::mixed_fb_b;
        r.xi = xi;
        r.eta = eta;
        r.eps = eps;
        r.label = std::string("[{f") + sign_char(xi) + ",b" + sign_char(eta) + "},b" +
                  sign_char(eps) + "]";
        r.lhs = commutator(anticommutator(f_gen(xi), b_gen(eta)), b_gen(eps));
        r.rhs = Rational(eps - eta) * f_gen(xi);
        rels.push_back(std::move(r));
      }

  // {{b^xi, f^eta}, f^eps} = 1/2 (eps - eta)^2 b^xi.
  for (int xi : kSigns)
    for (int eta : kSigns)
      for (int eps : kSigns) {
        Relation r;
        r.family = RelationFamily::mixed_bf_f;
        r.xi = xi;
        r.eta = eta;
        r.eps = eps;
        r.label = std::string("{{b") + sign_char(xi) + ",f" + sign_char(eta) + "},f" +
                  sign_char(eps) + "}";
        r.lhs = anticommutator(anticommutator(b_gen(xi), f_gen(eta)), f_gen(eps));
        r.rhs = (Rational((eps - eta) * (eps - eta)) / 2) * b_gen(xi);
        rels.push_back(std::move(r));
      }

  return rels;
}

Report verify_relations(const LadderAction& action, int max_m, int threads) {
  Report report{"relations", action.order().value, max_m, 0, {}};
  const std::vector<Relation> relations = enumerate_relations();

  // A trilinear word raises m by at most 3, so restricting the probe
  // vectors to m <= max_m - 3 keeps everything a relation can visit
  // within the declared window. (Evaluation itself is exact at any m;
  // the window is the contract with the caller, not a safety need.)
  std::vector<BasisIndex> domain;
  if (max_m >= 3) domain = canonical_basis(action.order(), Truncation(max_m - 3));

  struct Job {
    const Relation* rel;
    const BasisIndex* vec;
  };
  std::vector<Job> jobs;
  jobs.reserve(relations.size() * domain.size());
  for (const Relation& r : relations)
    for (const BasisIndex& v : domain) jobs.push_back({&r, &v});

  const auto run_job = [&](const Job& job, Report& into) {
    const VectorExpr v = VectorExpr::unit(*job.vec);
    const VectorExpr lhs = evaluate(action, job.rel->lhs, v);
    const VectorExpr rhs = evaluate(action, job.rel->rhs, v);
    into.check(lhs == rhs, job.rel->label + " on " + ket_string(*job.vec), "0",
               to_string(lhs - rhs));
  };

  const int workers = std::max(1, threads);
  if (workers == 1) {
    for (const Job& job : jobs) run_job(job, report);
    return report;
  }

  std::vector<Report> parts(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t k = std::size_t(t); k < jobs.size(); k += std::size_t(workers))
        run_job(jobs[k], parts[std::size_t(t)]);
    });
  }
  for (std::thread& th : pool) th.join();
  for (const Report& part : parts) report.merge(part);
  return report;
}

Report verify_vacuum(const LadderAction& action) {
  Report report{"vacuum", action.order().value, 0, 0, {}};
  const VectorExpr vac = VectorExpr::unit(vacuum_index);
  const Rational p(action.order().value);

  const auto expect = [&](const std::string& context, const VectorExpr& got,
                          const VectorExpr& want) {
    report.check(got == want, context, to_string(want), to_string(got));
  };

  expect("b-|0>", action.act(Generator::b_minus, vac), {});
  expect("f-|0>", action.act(Generator::f_minus, vac), {});
  expect("b-f+|0>", action.act(Generator::b_minus, action.act(Generator::f_plus, vac)), {});
  expect("f-b+|0>", action.act(Generator::f_minus, action.act(Generator::b_plus, vac)), {});
  expect("b-b+|0>", action.act(Generator::b_minus, action.act(Generator::b_plus, vac)),
         p * vac);
  expect("f-f+|0>", action.act(Generator::f_minus, action.act(Generator::f_plus, vac)),
         p * vac);
  return report;
}

Report verify_definitions(const LadderAction& action, int max_m) {
  Report report{"definitions", action.order().value, max_m, 0, {}};
  const ParaOrder p = action.order();
  const VectorExpr vac = VectorExpr::unit(vacuum_index);

  for (const BasisIndex& idx : canonical_basis(p, Truncation(max_m))) {
    // The defining word, pushed through the action table letter by
    // letter, must land exactly on the vector it defines.
    const VectorExpr built = evaluate(action, basis_defining_element(p, idx), vac);
    report.check(built == VectorExpr::unit(idx),
                 "defining word of " + ket_string(idx), ket_string(idx),
                 to_string(built));

    if (idx.tag == Tag::beta) {
      // Same identity with the two halves of the defining word kept
      // apart: 1/2 (f+)^(n-1)(b+)^m f+ |0> + 1/2 (f+)^(n-1)(b+)^(m-1) f+ b+ |0>.
      Word w1;
      w1.insert(w1.end(), std::size_t(idx.n - 1), Generator::f_plus);
      w1.insert(w1.end(), std::size_t(idx.m), Generator::b_plus);
      w1.push_back(Generator::f_plus);
      Word w2;
      w2.insert(w2.end(), std::size_t(idx.n - 1), Generator::f_plus);
      w2.insert(w2.end(), std::size_t(idx.m - 1), Generator::b_plus);
      w2.push_back(Generator::f_plus);
      w2.push_back(Generator::b_plus);
      VectorExpr sum = evaluate(action, w1, vac) + evaluate(action, w2, vac);
      sum *= Rational(1) / 2;
      report.check(sum == VectorExpr::unit(idx),
                   "split defining word of " + ket_string(idx), ket_string(idx),
                   to_string(sum));
    }
  }

  // R+|0> is the beta vector of (1,1); at p = 1 that label folds onto
  // (1/p) alpha, and the fold must come out of the word evaluation too.
  {
    const VectorExpr built =
        evaluate(action, builtin_element(p, Builtin::r_plus), vac);
    const VectorExpr want = reduce(p, 1, 1, Tag::beta, 1);
    report.check(built == want, "R+|0>", to_string(want), to_string(built));
  }

  // The n = p fold: the would-be beta word at n = p evaluates to (1/p) of
  // the alpha word's vector.
  for (int m = 1; m <= max_m; ++m) {
    AlgebraElement prefix = AlgebraElement::one();
    Word letters;
    letters.insert(letters.end(), std::size_t(p.value - 1), Generator::f_plus);
    letters.insert(letters.end(), std::size_t(m - 1), Generator::b_plus);
    const AlgebraElement beta_word = AlgebraElement::word(letters) *
                                     builtin_element(p, Builtin::r_plus);
    const VectorExpr lhs = evaluate(action, beta_word, vac);
    const VectorExpr alpha =
        evaluate(action, basis_defining_element(p, {m, p.value, Tag::alpha}), vac);
    const VectorExpr rhs = (Rational(1) / p.value) * alpha;
    report.check(lhs == rhs, "n=p fold of the beta word, m=" + std::to_string(m),
                 to_string(rhs), to_string(lhs));
  }

  return report;
}

Report verify_gram(const LadderAction& action, int max_m) {
  Report report{"gram", action.order().value, max_m, 0, {}};
  const ParaOrder p = action.order();
  const GramTable table(p, action);

  report.check(table.inner(vacuum_index, vacuum_index) == 1, "<0|0>", "1",
               to_string(table.inner(vacuum_index, vacuum_index)));

  for (int m = 0; m <= max_m; ++m) {
    for (int n = 0; n <= p.value; ++n) {
      const int d = subspace_dim(p, m, n);
      const RationalMatrix g = table.sector(m, n);
      const std::string where = "sector (" + std::to_string(m) + "," +
                                std::to_string(n) + ")";

      if (d == 1) {
        report.check(g.at(0, 0) > 0, where + " norm^2 positive", "> 0",
                     to_string(g.at(0, 0)));
        continue;
      }

      report.check(g.at(0, 1) == g.at(1, 0), where + " symmetric",
                   to_string(g.at(0, 1)), to_string(g.at(1, 0)));
      const Rational det = g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0);
      report.check(g.at(0, 0) > 0 && det > 0, where + " positive definite",
                   "leading minors > 0",
                   to_string(g.at(0, 0)) + " and det " + to_string(det));
      report.check(g.at(0, 0) == Rational(p.value) * g.at(0, 1),
                   where + " <a,a> = p <a,b>", to_string(g.at(0, 0)),
                   "p * " + to_string(g.at(0, 1)));
    }
  }

  // Norms along the m = 0 edge close to the product n! p! / (p-n)!.
  for (int n = 0; n <= p.value; ++n) {
    const Rational want = Rational(factorial(n)) * Rational(factorial(p.value)) /
                          Rational(factorial(p.value - n));
    const Rational got = table.inner({0, n, Tag::alpha}, {0, n, Tag::alpha});
    report.check(got == want, "norm^2 of |0," + std::to_string(n) + ",alpha>",
                 to_string(want), to_string(got));
  }

  // The n = p fold carries the factor 1/p through inner products: the
  // norm of f+ applied to |m,p-1,beta> must match both the direct sector
  // (m,p) value and the adjoint route through f- f+.
  if (p.value >= 2) {
    for (int m = 1; m <= max_m; ++m) {
      const VectorExpr u = VectorExpr::unit({m, p.value - 1, Tag::beta});
      const VectorExpr up = action.act(Generator::f_plus, u);
      const Rational direct = table.inner(up, up);
      const Rational adjoint_route =
          table.inner(u, action.act(Generator::f_minus, up));
      report.check(direct == adjoint_route,
                   "fold consistency at (" + std::to_string(m) + "," +
                       std::to_string(p.value) + ")",
                   to_string(adjoint_route), to_string(direct));
    }
  }

  return report;
}

Report verify_adjointness(const LadderAction& action, int max_m) {
  Report report{"adjointness", action.order().value, max_m, 0, {}};
  const GramTable table(action.order(), action);
  const std::vector<BasisIndex> window =
      canonical_basis(action.order(), Truncation(max_m));

  for (Generator g : all_generators) {
    const Generator adj = adjoint_of(g);
    for (const BasisIndex& u : window) {
      const VectorExpr gu = action.act(g, VectorExpr::unit(u));
      for (const BasisIndex& v : window) {
        const Rational lhs = table.inner(gu, VectorExpr::unit(v));
        const Rational rhs = table.inner(VectorExpr::unit(u),
                                         action.act(adj, VectorExpr::unit(v)));
        report.check(lhs == rhs,
                     "<" + to_string(g) + " " + ket_string(u) + ", " +
                         ket_string(v) + ">",
                     to_string(rhs), to_string(lhs));
      }
    }
  }
  return report;
}

Report verify_csco(const LadderAction& action, int max_m) {
  Report report{"csco", action.order().value, max_m, 0, {}};
  const ParaOrder p = action.order();
  const AlgebraElement nb = builtin_element(p, Builtin::num_b);
  const AlgebraElement nf = builtin_element(p, Builtin::num_f);
  const AlgebraElement ns = builtin_element(p, Builtin::num_s);

  const std::vector<std::pair<std::string, AlgebraElement>> commutators_to_check = {
      {"[N_b,N_f]", commutator(nb, nf)},
      {"[N_b,N_s]", commutator(nb, ns)},
      {"[N_f,N_s]", commutator(nf, ns)},
  };

  for (const BasisIndex& idx : canonical_basis(p, Truncation(max_m))) {
    const VectorExpr v = VectorExpr::unit(idx);

    for (const auto& [label, element] : commutators_to_check) {
      const VectorExpr image = evaluate(action, element, v);
      report.check(image.is_zero(), label + " on " + ket_string(idx), "0",
                   to_string(image));
    }

    const VectorExpr nbv = evaluate(action, nb, v);
    report.check(nbv == Rational(idx.m) * v, "N_b on " + ket_string(idx),
                 to_string(Rational(idx.m) * v), to_string(nbv));
    const VectorExpr nfv = evaluate(action, nf, v);
    report.check(nfv == Rational(idx.n) * v, "N_f on " + ket_string(idx),
                 to_string(Rational(idx.n) * v), to_string(nfv));

    const VectorExpr nsv = evaluate(action, ns, v);
    if (subspace_dim(p, idx.m, idx.n) == 1) {
      const VectorExpr want = (Rational(1) / 2) * v;
      report.check(nsv == want, "N_s on " + ket_string(idx), to_string(want),
                   to_string(nsv));
    } else if (idx.tag == Tag::alpha) {
      const VectorExpr want = (Rational(1) / 2) * v;
      report.check(nsv == want, "N_s on " + ket_string(idx), to_string(want),
                   to_string(nsv));
    } else {
      // N_s beta = (1/p) alpha - 1/2 beta: triangular with spectrum +-1/2.
      VectorExpr want = VectorExpr::unit({idx.m, idx.n, Tag::alpha}, Rational(1) / p.value);
      want += VectorExpr::unit(idx, Rational(-1) / 2);
      report.check(nsv == want, "N_s on " + ket_string(idx), to_string(want),
                   to_string(nsv));

      // The second eigenvector: N_s (alpha - p beta) = -1/2 (alpha - p beta).
      VectorExpr minus = VectorExpr::unit({idx.m, idx.n, Tag::alpha});
      minus += VectorExpr::unit(idx, Rational(-p.value));
      const VectorExpr image = evaluate(action, ns, minus);
      const VectorExpr target = (Rational(-1) / 2) * minus;
      report.check(image == target,
                   "N_s on alpha - p*beta at (" + std::to_string(idx.m) + "," +
                       std::to_string(idx.n) + ")",
                   to_string(target), to_string(image));
    }
  }
  return report;
}

Report verify_grading(const LadderAction& action, int max_m) {
  Report report{"grading", action.order().value, max_m, 0, {}};
  for (const BasisIndex& idx : canonical_basis(action.order(), Truncation(max_m))) {
    const GradeDegree dv = grade_of(idx);
    for (Generator g : all_generators) {
      const GradeDegree want = grade_of(g) + dv;
      const VectorExpr image = action.act(g, idx);
      for (const auto& [target, c] : image.terms()) {
        report.check(grade_of(target) == want,
                     "deg of " + to_string(g) + " " + ket_string(idx) + " term " +
                         ket_string(target),
                     to_string(want), to_string(grade_of(target)));
      }
    }
  }
  return report;
}

Report verify_irreducibility(const LadderAction& action, int max_m) {
  Report report{"irreducibility", action.order().value, max_m, 0, {}};
  const std::vector<BasisIndex> window =
      canonical_basis(action.order(), Truncation(max_m));
  std::map<BasisIndex, int> index_of;
  for (std::size_t i = 0; i < window.size(); ++i) index_of[window[i]] = int(i);

  // Directed single-generator transition graph, clipped to the window.
  std::vector<std::vector<int>> edges(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) {
    for (Generator g : all_generators) {
      const VectorExpr image = action.act(g, window[i]);
      for (const auto& [target, c] : image.terms()) {
        if (auto it = index_of.find(target); it != index_of.end())
          edges[i].push_back(it->second);
      }
    }
  }

  // Inner vertices: everything a generator can produce from them is still
  // inside the window, so their connectivity is not a truncation artifact.
  // Paths may still route through the outer rim.
  std::vector<int> inner;
  for (std::size_t i = 0; i < window.size(); ++i)
    if (window[i].m <= max_m - 1) inner.push_back(int(i));

  const auto reachable_from = [&](int start) {
    std::vector<char> seen(window.size(), 0);
    std::vector<int> stack{start};
    seen[std::size_t(start)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : edges[std::size_t(v)]) {
        if (!seen[std::size_t(w)]) {
          seen[std::size_t(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    return seen;
  };

  for (int start : inner) {
    const std::vector<char> seen = reachable_from(start);
    for (int goal : inner) {
      report.check(seen[std::size_t(goal)] != 0,
                   ket_string(window[std::size_t(start)]) + " reaches " +
                       ket_string(window[std::size_t(goal)]),
                   "reachable", "unreachable");
    }
  }
  return report;
}

Report verify_orthonormal(const LadderAction& action, int max_m) {
  Report report{"orthonormal", action.order().value, max_m, 0, {}};
  const ParaOrder p = action.order();
  constexpr double kTolerance = 1e-12;
  for (int m = 0; m <= max_m; ++m) {
    for (int n = 0; n <= p.value; ++n) {
      if (subspace_dim(p, m, n) == 0) continue;
      const std::string where = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      const double ortho = orthonormality_residual(p, m, n);
      report.check(ortho < kTolerance, "orthonormality residual at " + where,
                   "< 1e-12", std::to_string(ortho));
      const double complete = completeness_residual(p, m, n);
      report.check(complete < kTolerance, "completeness residual at " + where,
                   "< 1e-12", std::to_string(complete));
    }
  }
  return report;
}

std::vector<Report> run_all_suites(const LadderAction& action, int max_m, int threads) {
  std::vector<Report> out;
  const auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      Report r{name, action.order().value, max_m, 0, {}};
      r.check(false, name + " suite ran to completion", "no exception", e.what());
      out.push_back(std::move(r));
    }
  };
  guarded("vacuum", [&] { return verify_vacuum(action); });
  guarded("relations", [&] { return verify_relations(action, max_m, threads); });
  guarded("definitions", [&] { return verify_definitions(action, max_m); });
  guarded("gram", [&] { return verify_gram(action, max_m); });
  guarded("adjointness", [&] { return verify_adjointness(action, max_m); });
  guarded("csco", [&] { return verify_csco(action, max_m); });
  guarded("grading", [&] { return verify_grading(action, max_m); });
  guarded("irreducibility", [&] { return verify_irreducibility(action, max_m); });
  guarded("orthonormal", [&] { return verify_orthonormal(action, max_m); });
  return out;
}

bool all_passed(const std::vector<Report>& reports) {
  for (const Report& r : reports)
    if (!r.passed()) return false;
  return true;
}

}  // namespace parafock
