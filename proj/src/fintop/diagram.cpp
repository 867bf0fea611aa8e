#include "twisted/error.hpp"
#include "twisted/fintop.hpp"

namespace twisted::fintop {

namespace {

// A finite space is compact, so it is a compactum containing every subset.
bool contained_in_compactum(const FiniteTopology& y, PointSet) {
  return is_compact(y, y.full());
}

bool locally_compact(const FiniteTopology& y) {
  for (int p = 0; p < y.size(); ++p)
    if (!is_compact(y, y.closure(y.minimal_neighborhood(p)))) return false;
  return true;
}

}  // namespace

bool nicely_covered(const ContinuousFiniteMap& f) {
  // Preimages shrink with W, so if any admissible cover exists then the
  // cover by minimal neighborhoods is admissible too.
  const auto& z = f.target();
  for (int phi = 0; phi < z.size(); ++phi)
    if (!contained_in_compactum(f.source(), f.preimage(z.minimal_neighborhood(phi))))
      return false;
  return true;
}

bool nicely_covered_exhaustive(const ContinuousFiniteMap& f) {
  const auto& z = f.target();
  PointSet covered = 0;
  for (PointSet w : z.opens())
    if (contained_in_compactum(f.source(), f.preimage(w))) covered |= w;
  return covered == z.full();
}

bool DiagramReport::consistent() const {
  for (const auto& i : implications)
    if (i.applicable && !i.holds) return false;
  return true;
}

DiagramReport check_diagram(const FiniteTopology& y, const FiniteTopology& z,
                            const ContinuousFiniteMap& f) {
  const SumSpace tw = twisted_sum(y, z, f);
  const SumSpace di = direct_sum(y, z);

  DiagramReport r;
  r.sums_coincide = tw.topology() == di.topology();
  r.y_compact = is_compact(y, y.full());
  r.y_locally_compact = locally_compact(y);
  r.image_closed = z.is_closed(f.image());
  r.z_block_open = tw.topology().is_open(tw.z_block());
  r.z_nicely_covered = nicely_covered(f);
  r.z_hausdorff = z.is_hausdorff();

  auto implies = [](bool a, bool b) { return !a || b; };
  r.implications = {
      {"(1)=>(5)", true, implies(r.sums_coincide, r.z_block_open)},
      {"(5)=>(1)", true, implies(r.z_block_open, r.sums_coincide)},
      {"(5)=>(6)", true, implies(r.z_block_open, r.z_nicely_covered)},
      {"(6)=>(5)", true, implies(r.z_nicely_covered, r.z_block_open)},
      {"(2)=>(6)", true, implies(r.y_compact, r.z_nicely_covered)},
      {"(6)=>(3)", true, implies(r.z_nicely_covered, r.y_locally_compact)},
      {"(6)=>(4) [Z Hausdorff]", r.z_hausdorff,
       implies(r.z_nicely_covered, r.image_closed)},
  };
  return r;
}

}  // namespace twisted::fintop
