#ifndef HQ_TENSOR_CHECKS_HPP_
#define HQ_TENSOR_CHECKS_HPP_

#include <string>
#include <vector>

#include "hq/hypergraph.hpp"
#include "hq/ideal.hpp"
#include "hq/ncpoly.hpp"
#include "hq/presentation.hpp"

namespace hq {

struct TensorCheckItem {
  std::string description;
  bool pass = false;
};

struct TensorCheckReport {
  int degree_bound = 0;
  bool pass = false;
  std::vector<TensorCheckItem> items;
};

// Substitutes u_ij -> sum_k u_ik (x) u_kj into p; nv/ne give the index
// ranges of the two magic families.
TensorPoly coproduct_image(const NCPoly& p, int nv, int ne);

// Substitutes p_v -> sum_w p_w (x) u_wv and s_e -> sum_f s_f (x) u_fe.
TensorPoly coaction_image(const NCPoly& p, int nv, int ne);

// Applies the counit to the right leg: u_ij -> delta_ij.
NCPoly apply_counit_right(const TensorPoly& t);

// Alternately reduces the right-leg coefficients (grouped by left word) and
// the left-leg coefficients (grouped by right word) modulo the respective
// ideals. True iff the tensor polynomial collapses to zero, which places it
// in the legwise tensor ideal at the engines' degree bound.
bool tensor_reduces_to_zero(const TensorPoly& t, IdealEngine& left_engine, IdealEngine& right_engine,
                            int max_rounds = 12);

// Counit kills every relation exactly; the coproduct image of every relation
// lies in the legwise tensor ideal.
TensorCheckReport coproduct_check(const Hypergraph& h, int degree_bound);

// The coaction images satisfy the defining relations of the hypergraph
// algebra, the derived intertwiner entries certify over the relation-free
// magic presentation, and (id (x) counit) after the coaction is the identity.
TensorCheckReport coaction_check(const Hypergraph& h, int degree_bound);

}  // namespace hq

#endif  // HQ_TENSOR_CHECKS_HPP_
