// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion. Exit code 0
// only when all pass within their time budgets.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "folk/modelstruct.hpp"
#include "folk/textio.hpp"

using namespace folk;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string name;
  double budget_s;
  bool pass = false;
  double took_s = 0;
  std::string detail;
};

double seconds(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Homotopy> acceptance_homotopies(Kit& kit, const Corpus& corpus) {
  // Every homotopy between every pair of base categories (4242 for
  // corpus-1); no caps.
  return corpus_homotopies(kit, corpus, 0);
}

}  // namespace

int main() {
  std::vector<Criterion> results;
  Kit kit;
  Corpus corpus = default_corpus(kit);

  // 1. Interval axiom suite.
  {
    Criterion c{"AC1 interval axiom suite", 1.0};
    auto t0 = Clock::now();
    Report rep = verify_interval(kit, corpus.test_family);
    c.took_s = seconds(t0);
    c.pass = rep.all_pass();
    if (!c.pass)
      for (const auto& l : rep.lines)
        if (!l.pass) c.detail = l.name + ": " + l.witness;
    results.push_back(c);
  }

  // 2. Adjunction: round trips, boundary compatibility, contraction
  // compatibility, over the corpus homotopy family and all corpus functors.
  {
    Criterion c{"AC2 adjunction transpose", 5.0};
    auto t0 = Clock::now();
    c.pass = true;
    std::vector<Homotopy> family = acceptance_homotopies(kit, corpus);
    for (const auto& h : family) {
      FunctorMap t = transpose(kit, h);
      if (transpose_inv(kit, h.a0, t) != h || compose(kit.e0(h.a1), t) != h.f0 ||
          compose(kit.e1(h.a1), t) != h.f1) {
        c.pass = false;
        c.detail = "round trip or boundary fails on a homotopy " + h.a0->name() + " -> " +
                   h.a1->name();
        break;
      }
    }
    if (c.pass)
      for (const auto& f : corpus.functors) {
        if (kit.adj(compose(f, kit.p(f.dom))) != compose(kit.c(f.cod), f)) {
          c.pass = false;
          c.detail = "adj(f∘p) != c∘f for " + f.name;
          break;
        }
      }
    c.took_s = seconds(t0);
    results.push_back(c);
  }

  // 3. Homotopy strictness as carrier equalities.
  {
    Criterion c{"AC3 homotopy strictness", 5.0};
    auto t0 = Clock::now();
    c.pass = true;
    for (const auto& h : acceptance_homotopies(kit, corpus)) {
      if (hcompose(kit, identity_homotopy(kit, h.f0), h) != h ||
          hcompose(kit, h, identity_homotopy(kit, h.f1)) != h ||
          hcompose(kit, reverse(kit, h), h) != identity_homotopy(kit, h.f1)) {
        c.pass = false;
        c.detail = "strictness fails on a homotopy " + h.a0->name() + " -> " + h.a1->name();
        break;
      }
    }
    c.took_s = seconds(t0);
    results.push_back(c);
  }

  // 4. Oracle agreement: equivalence search vs ff+eso, cofibration search
  // vs injectivity, cylinder-side vs co-cylinder-side fibration verdicts.
  {
    Criterion c{"AC4 oracle agreement", 30.0};
    auto t0 = Clock::now();
    int disagreements = 0;
    std::string first;
    for (const auto& f : corpus.functors) {
      bool eq_search = find_equivalence(kit, f).has_value();
      bool eq_oracle = equivalence_oracle(f);
      bool cof_search = is_cofibration(kit, f).has_value();
      bool cof_oracle = injective_on_objects_oracle(f);
      bool fib_cyl = is_isofibration(f).holds;
      bool fib_cocyl = cocylinder_fibration_verdict(kit, f);
      if (eq_search != eq_oracle || cof_search != cof_oracle || fib_cyl != fib_cocyl) {
        ++disagreements;
        if (first.empty()) first = f.name;
      }
    }
    c.pass = disagreements == 0;
    if (!c.pass) c.detail = std::to_string(disagreements) + " disagreements, first at " + first;
    c.took_s = seconds(t0);
    results.push_back(c);
  }

  // 5. Factorizations: all four modes on every corpus functor, exact
  // composite and re-validated certificates.
  {
    Criterion c{"AC5 factorizations", 30.0};
    auto t0 = Clock::now();
    c.pass = true;
    for (const auto& f : corpus.functors) {
      for (FactorMode mode : {FactorMode::MappingCyl, FactorMode::MappingCocyl,
                              FactorMode::CofThenTrivFib, FactorMode::TrivCofThenFib}) {
        try {
          Factorization fac = factor(kit, f, mode);
          std::string why;
          if (compose(fac.g, fac.j) != f) throw std::logic_error("g∘j != f");
          if (!validate_factorization(kit, fac, &why)) throw std::logic_error(why);
        } catch (const std::exception& e) {
          c.pass = false;
          c.detail = "mode " + to_string(mode) + ", f = " + f.name + ": " + e.what();
          break;
        }
      }
      if (!c.pass) break;
    }
    c.took_s = seconds(t0);
    results.push_back(c);
  }

  // 6. Formula lifts confirmed by brute force on generated problems for
  // both distinguished class pairs.
  {
    Criterion c{"AC6 formula lifts vs brute force", 60.0};
    auto t0 = Clock::now();
    c.pass = true;
    size_t problems = 0;
    const size_t cap_per_pair = 12;
    // Classify once.
    std::vector<int> kind(corpus.functors.size(), 0);  // bit 1 cof, 2 fib, 4 equiv, 8 ncc
    std::vector<std::optional<EquivalenceCertificate>> eq(corpus.functors.size());
    for (size_t i = 0; i < corpus.functors.size(); ++i) {
      const FunctorMap& f = corpus.functors[i];
      if (is_cofibration(kit, f)) kind[i] |= 1;
      if (is_isofibration(f).holds) kind[i] |= 2;
      eq[i] = find_equivalence(kit, f);
      if (eq[i]) kind[i] |= 4;
      if (normally_cloven_cofibration(kit, f)) kind[i] |= 8;
    }
    auto squares = [&](const FunctorMap& j, const FunctorMap& f) {
      std::vector<LiftProblem> out;
      for (const auto& g0 : kit.functors(j.dom, f.dom)) {
        FunctorMap fg0 = compose(f, g0);
        for (const auto& g1 : kit.functors(j.cod, f.cod)) {
          if (compose(g1, j) != fg0) continue;
          out.push_back({j, f, g0, g1});
          if (out.size() >= cap_per_pair) return out;
        }
        if (out.size() >= cap_per_pair) break;
      }
      return out;
    };
    try {
      // (trivial nc cofibration, fibration)
      for (size_t ji = 0; ji < corpus.functors.size() && c.pass; ++ji) {
        if ((kind[ji] & (8 | 4)) != (8 | 4)) continue;
        auto nc = normally_cloven_cofibration(kit, corpus.functors[ji]);
        SdrCertificate sdr_j = sdr_for_trivial_cofibration(kit, corpus.functors[ji], *eq[ji]);
        for (size_t fi = 0; fi < corpus.functors.size() && c.pass; ++fi) {
          if (!(kind[fi] & 2)) continue;
          auto sqs = squares(corpus.functors[ji], corpus.functors[fi]);
          if (sqs.empty()) continue;
          CocylMData md = cocyl_m_sdr_data(kit, corpus.functors[fi]);
          for (const auto& p : sqs) {
            ++problems;
            LiftSolution sol = dual_chep_lift(kit, p, *nc, sdr_j, md);
            if (!fills(p, sol.l)) throw std::logic_error("lift does not fill");
            if (!brute_force_fill(p)) throw std::logic_error("brute force finds no filler");
          }
        }
      }
      // (cofibration, trivial nc fibration)
      for (size_t fi = 0; fi < corpus.functors.size() && c.pass; ++fi) {
        if ((kind[fi] & (2 | 4)) != (2 | 4)) continue;
        if (!is_normally_cloven_fibration(kit, corpus.functors[fi])) continue;
        SdrRetractionCertificate sdr_f =
            sdr_for_trivial_fibration(kit, corpus.functors[fi], *eq[fi]);
        Cleavage cl = canonical_cleavage(corpus.functors[fi]);
        for (size_t ji = 0; ji < corpus.functors.size() && c.pass; ++ji) {
          if (!(kind[ji] & 1)) continue;
          auto w = is_cofibration(kit, corpus.functors[ji]);
          auto sqs = squares(corpus.functors[ji], corpus.functors[fi]);
          if (sqs.empty()) continue;
          SdrCertificate sdr_m = sdr_of_m(kit, *w);
          for (const auto& p : sqs) {
            ++problems;
            LiftSolution sol = chep_lift(kit, p, *w, sdr_m, cl, sdr_f);
            if (!fills(p, sol.l)) throw std::logic_error("lift does not fill");
            if (!brute_force_fill(p)) throw std::logic_error("brute force finds no filler");
          }
        }
      }
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = e.what();
    }
    c.detail = c.detail.empty() ? (std::to_string(problems) + " problems") : c.detail;
    c.took_s = seconds(t0);
    results.push_back(c);
  }

  // 7. Trivial class characterizations as exact set equalities.
  {
    Criterion c{"AC7 trivial class characterizations", 30.0};
    auto t0 = Clock::now();
    c.pass = true;
    for (const auto& f : corpus.functors) {
      bool tfib = is_isofibration(f).holds && equivalence_oracle(f);
      bool tcof = is_cofibration(kit, f).has_value() && equivalence_oracle(f);
      if (tfib != is_sdr_retraction(kit, f)) {
        c.pass = false;
        c.detail = "trivial fibrations vs SDRs differ at " + f.name;
        break;
      }
      if (tcof != is_sdr_section(kit, f)) {
        c.pass = false;
        c.detail = "trivial cofibrations vs SDR sections differ at " + f.name;
        break;
      }
      // The constructive side: a certificate exists whenever the class
      // membership holds.
      if (tfib) {
        auto cert = find_equivalence(kit, f);
        SdrRetractionCertificate s = sdr_for_trivial_fibration(kit, f, *cert);
        if (!validate_sdr_retraction(kit, s)) {
          c.pass = false;
          c.detail = "constructed SDR retraction invalid at " + f.name;
          break;
        }
      }
      if (tcof) {
        auto cert = find_equivalence(kit, f);
        SdrCertificate s = sdr_for_trivial_cofibration(kit, f, *cert);
        if (!validate_sdr(kit, s)) {
          c.pass = false;
          c.detail = "constructed SDR invalid at " + f.name;
          break;
        }
      }
    }
    c.took_s = seconds(t0);
    results.push_back(c);
  }

  // 8. Model axioms for both variants, plus fault injection.
  {
    Criterion c{"AC8 model axioms (A, B, fault injection)", 60.0};
    auto t0 = Clock::now();
    Report ra = verify_model_axioms(kit, corpus, Variant::A);
    Report rb = verify_model_axioms(kit, corpus, Variant::B);
    VerifyOptions broken;
    broken.cleavage = [](const FunctorMap& f) { return broken_cleavage(f); };
    Report rf = verify_model_axioms(kit, corpus, Variant::A, broken);
    bool fault_detected = false;
    std::string fault_witness;
    for (const auto& l : rf.lines)
      if (!l.pass && l.name.rfind("(iv)", 0) == 0 && !l.witness.empty()) {
        fault_detected = true;
        fault_witness = l.witness;
      }
    c.pass = ra.all_pass() && rb.all_pass() && fault_detected;
    if (!ra.all_pass()) c.detail = "variant A fails";
    if (!rb.all_pass()) c.detail += " variant B fails";
    if (!fault_detected)
      c.detail += " fault injection not detected";
    else
      c.detail = "fault witness: " + fault_witness.substr(0, 80);
    c.took_s = seconds(t0);
    results.push_back(c);
  }

  bool all = true;
  for (const auto& c : results) {
    bool within = c.took_s <= c.budget_s;
    bool ok = c.pass && within;
    all = all && ok;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.took_s << " s / budget "
         << c.budget_s << " s]";
    if (!c.pass && !c.detail.empty()) line << "  " << c.detail;
    if (c.pass && !within) line << "  (passed but over budget)";
    if (c.pass && within && !c.detail.empty()) line << "  (" << c.detail << ")";
    std::cout << line.str() << "\n";
  }
  std::cout << (all ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES") << "\n";
  return all ? 0 : 1;
}
