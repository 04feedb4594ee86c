#include "iskk/error.hpp"
#include "iskk/induction.hpp"

namespace iskk {

  BPrimeResult build_bprime(SpectrumPtr x, ElementSet const& L, ElementSet const& P,
                            GAlgebra const& a, GAlgebra const& b) {
    auto const& s = x->semigroup();
    if (!is_subsemigroup(s, L)) {
      throw Error(ErrorCode::NotSubsemigroup, "L is not a unital subsemigroup");
    }
    for (auto p : members(P)) {
      if (!s.is_idempotent(p)) {
        throw Error(ErrorCode::NotIdempotent, s.name(p) + " is not a projection");
      }
    }
    ElementSet gens = L | P;
    auto const lprime = generate(s, gens);
    if (!is_e_unitary(s, lprime)) {
      throw Error(ErrorCode::NotEUnitary, "the semigroup generated by L and P is not E-unitary");
    }
    auto const Lp = ActingSet::plain(x, lprime);
    auto const Ls = ActingSet::plain(x, L);
    if (a.acting().elements() != Lp->elements() || a.acting().is_groupoid()) {
      throw Error(ErrorCode::HypothesesNotMet, "A must be an L'-algebra");
    }
    if (b.acting().elements() != Ls->elements() || b.acting().is_groupoid()) {
      throw Error(ErrorCode::HypothesesNotMet, "B must be an L-algebra");
    }
    if (!a.algebra().is_commutative()) {
      throw Error(ErrorCode::HypothesesNotMet, "A must be commutative");
    }

    struct Slot {
      std::size_t   coarse;
      ProjectionSet points;
    };
    std::vector<Slot>                   slots;
    std::vector<std::vector<SparseRow>> spans;
    std::vector<std::string>            labels;
    std::vector<std::size_t>            counts, dims;
    SparseMatrix                        total(b.dim(), b.dim());
    bool                                orthogonal = true;
    std::vector<SparseMatrix>           coarse_proj;
    auto const&                         coarse = b.acting().atoms();
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      auto const bi = b.projection(coarse[i].points);
      for (auto const& q : coarse_proj) {
        orthogonal = orthogonal && (q * bi).is_zero();
      }
      coarse_proj.push_back(bi);
      total = total + bi;
      auto const span = nonzero_columns(bi);
      std::size_t n   = 0;
      for (auto const& fine : Lp->atoms()) {
        if (!fine.points.is_subset_of(coarse[i].points) || a.projection(fine.points).is_zero()) {
          continue;
        }
        slots.push_back({i, fine.points});
        spans.push_back(span);
        labels.push_back("B" + std::to_string(i + 1) + "," + std::to_string(++n));
      }
      counts.push_back(n);
      Echelon e(b.dim());
      for (auto const& v : span) {
        e.insert(v);
      }
      dims.push_back(e.rank());
    }
    auto const fs = fiber_sum(b.algebra(), spans, labels);

    Report                    rep("build_bprime");
    bool                      well_defined = true;
    std::vector<SparseMatrix> act;
    for (std::size_t k = 0; k < Lp->size(); ++k) {
      auto const lp  = *Lp->plain_element(k);
      auto const src = s.mul(s.star(lp), lp);
      std::vector<std::size_t> lifts;
      for (auto l : members(L)) {
        if (!s.is_zero(l) && s.mul(l, src) == lp) {
          lifts.push_back(l);
        }
      }
      if (lifts.empty()) {
        throw Error(ErrorCode::HypothesesNotMet, s.name(lp) + " is not of the form l p");
      }
      auto const dom = x->proj(src);
      std::vector<SparseMatrix> candidates;
      for (auto l : lifts) {
        std::vector<std::optional<BlockMove>> moves(slots.size());
        for (std::size_t j = 0; j < slots.size(); ++j) {
          if (!slots[j].points.is_subset_of(dom)) {
            continue;
          }
          auto const image = x->act_proj(lp, slots[j].points);
          bool       found = false;
          for (std::size_t t = 0; t < slots.size() && !found; ++t) {
            if (slots[t].points == image) {
              moves[t] = BlockMove{j, b.plain_action(l)};
              found    = true;
            }
          }
          if (!found) {
            throw Error(ErrorCode::InvalidAction,
                        "image of " + x->name(slots[j].points) + " under " + s.name(lp)
                            + " vanishes in A");
          }
        }
        candidates.push_back(fiber_map(fs, fs, moves));
      }
      for (auto const& c : candidates) {
        well_defined = well_defined && c == candidates.front();
      }
      act.push_back(candidates.front());
    }
    GAlgebra bp(fs.algebra, Lp, std::move(act), "B'");

    std::size_t sum = 0;
    for (auto d : dims) {
      sum += d;
    }
    rep.add("B is the sum of the B_i", total.is_identity() && orthogonal && sum == b.dim());
    rep.add("action independent of the presentation l p", well_defined);
    rep.merge(validate_g_algebra(bp), "B' ");
    rep.set("block_counts", counts);
    rep.set("block_dims", dims);
    rep.set("dim", bp.dim());
    return BPrimeResult{lprime, std::move(bp), std::move(counts), std::move(dims), std::move(rep)};
  }

}  // namespace iskk
