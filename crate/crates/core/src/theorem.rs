//! Constructive and verification layer over factor pairs `(G, H)`:
//! the distinct-cardinality witness in `G □ H` for a factor with an isolatable
//! vertex, the disjoint-maximal-set checks, and the main-theorem verifier.

use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{
    cartesian_product, closed_neighborhood, delete_closed_neighborhood, Graph, ProductIndexMap,
};
use crate::independence::{
    check_well_covered, enumerate_maximal_independent_sets, extend_to_maximal,
    is_maximal_independent, is_well_covered, isolatable_vertices, IsolatableWitness,
    WellCoveredReport,
};
use crate::vertex_set::VertexSet;

/// Two maximal independent sets of `G □ H` of different sizes, built from an
/// isolatable vertex `x` of `G` and maximal independent sets `A`, `B` of `H`
/// with `|A| > |B|`. All product sets use the row-major numbering of `map`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductWitness {
    pub map: ProductIndexMap,
    pub x: usize,
    /// Certificate for `x`: `G - N[i_set] = {x}`.
    pub i_set: VertexSet,
    pub a: VertexSet,
    pub b: VertexSet,
    /// Maximal independent in `(G - N[x]) □ H`, containing `I × A`.
    pub j: VertexSet,
    pub j1: VertexSet,
    pub j2: VertexSet,
    /// Vertices of `N(x) × V(H)` not dominated by `j1`.
    pub xa: VertexSet,
    /// Vertices of `N(x) × V(H)` not dominated by `j2`.
    pub xb: VertexSet,
    pub l: VertexSet,
    pub m: VertexSet,
    pub big: VertexSet,
    pub small: VertexSet,
}

/// Outcome of checking every structural claim about a [`ProductWitness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessChecks {
    pub j_contains_i_times_a: bool,
    pub j_maximal_in_residual_product: bool,
    pub j_avoids_closed_neighborhood_columns: bool,
    pub xb_subset_of_xa: bool,
    pub xa_inside_neighbor_columns: bool,
    pub xa_avoids_a_columns: bool,
    pub xa_undominated_by_j1: bool,
    pub xb_undominated_by_j2: bool,
    pub l_maximal_in_xb: bool,
    pub m_extends_l_maximal_in_xa: bool,
    pub j1_j2_gap_is_a_b_gap: bool,
    pub big_maximal: bool,
    pub small_maximal: bool,
    pub big_larger: bool,
}

impl WitnessChecks {
    pub fn all(&self) -> bool {
        let WitnessChecks {
            j_contains_i_times_a,
            j_maximal_in_residual_product,
            j_avoids_closed_neighborhood_columns,
            xb_subset_of_xa,
            xa_inside_neighbor_columns,
            xa_avoids_a_columns,
            xa_undominated_by_j1,
            xb_undominated_by_j2,
            l_maximal_in_xb,
            m_extends_l_maximal_in_xa,
            j1_j2_gap_is_a_b_gap,
            big_maximal,
            small_maximal,
            big_larger,
        } = *self;
        j_contains_i_times_a
            && j_maximal_in_residual_product
            && j_avoids_closed_neighborhood_columns
            && xb_subset_of_xa
            && xa_inside_neighbor_columns
            && xa_avoids_a_columns
            && xa_undominated_by_j1
            && xb_undominated_by_j2
            && l_maximal_in_xb
            && m_extends_l_maximal_in_xa
            && j1_j2_gap_is_a_b_gap
            && big_maximal
            && small_maximal
            && big_larger
    }
}

fn singleton(n: usize, v: usize) -> VertexSet {
    let mut s = VertexSet::new(n);
    s.insert(v);
    s
}

/// Adds vertices of `allowed`, ascending, whenever they have no neighbor in
/// the set built so far.
fn extend_within(p: &Graph, seed: &VertexSet, allowed: &VertexSet) -> VertexSet {
    let mut out = seed.clone();
    for v in allowed {
        if !out.contains(v) && !p.neighbors(v).intersects(&out) {
            out.insert(v);
        }
    }
    out
}

fn maximal_within(p: &Graph, s: &VertexSet, allowed: &VertexSet) -> bool {
    s.is_subset(allowed)
        && p.is_independent_unchecked(s)
        && allowed
            .iter()
            .all(|v| s.contains(v) || p.neighbors(v).intersects(s))
}

/// Builds the witness. Every extension step scans candidates in ascending
/// product index, so the result is deterministic.
pub fn build_product_witness(
    g: &Graph,
    iso: &IsolatableWitness,
    h: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    caps: &Caps,
) -> Result<ProductWitness> {
    iso.validate(g)?;
    for s in [a, b] {
        if !is_maximal_independent(h, s)? {
            return Err(Error::NotMaximalIndependent);
        }
    }
    if a.len() <= b.len() {
        return Err(Error::SizesNotOrdered {
            larger: a.len(),
            smaller: b.len(),
        });
    }
    let (p, map) = cartesian_product(g, h, caps)?;
    let x = iso.x;
    let n = map.order();

    let (residual, rmap) = delete_closed_neighborhood(g, &singleton(g.order(), x))?;
    let mut j = VertexSet::new(n);
    if residual.order() > 0 {
        let (rp, rpmap) = cartesian_product(&residual, h, caps)?;
        let seed = rpmap.product_set(&rmap.restrict(&iso.set), a);
        let jr = extend_to_maximal(&rp, &seed)?;
        for v in &jr {
            let (gx, hy) = rpmap.decode(v);
            j.insert(map.encode(rmap.original(gx), hy));
        }
    }

    let column_x = singleton(g.order(), x);
    let j1 = j.union(&map.product_set(&column_x, a));
    let j2 = j.union(&map.product_set(&column_x, b));
    let neighbor_columns = map.product_set(g.neighbors(x), &h.vertices());
    let xa = neighbor_columns.difference(&closed_neighborhood(&p, &j1)?);
    let xb = neighbor_columns.difference(&closed_neighborhood(&p, &j2)?);
    let l = extend_within(&p, &VertexSet::new(n), &xb);
    let m = extend_within(&p, &l, &xa);
    let big = j1.union(&m);
    let small = j2.union(&l);

    Ok(ProductWitness {
        map,
        x,
        i_set: iso.set.clone(),
        a: a.clone(),
        b: b.clone(),
        j,
        j1,
        j2,
        xa,
        xb,
        l,
        m,
        big,
        small,
    })
}

impl ProductWitness {
    /// Re-checks every claim with direct independence and domination tests on
    /// the product; nothing here enumerates.
    pub fn verify(&self, g: &Graph, h: &Graph, caps: &Caps) -> Result<WitnessChecks> {
        let (p, map) = cartesian_product(g, h, caps)?;
        if map != self.map {
            return Err(Error::HostMismatch {
                expected: map.order(),
                found: self.map.order(),
            });
        }
        let x = self.x;
        let closed_x = closed_neighborhood(g, &singleton(g.order(), x))?;
        let residual_vertices = map.product_set(&closed_x.complement(), &h.vertices());
        let neighbor_columns = map.product_set(g.neighbors(x), &h.vertices());
        let a_columns = map.product_set(&g.vertices(), &self.a);

        Ok(WitnessChecks {
            j_contains_i_times_a: map.product_set(&self.i_set, &self.a).is_subset(&self.j),
            j_maximal_in_residual_product: maximal_within(&p, &self.j, &residual_vertices),
            j_avoids_closed_neighborhood_columns: self
                .j
                .is_disjoint(&map.product_set(&closed_x, &h.vertices())),
            xb_subset_of_xa: self.xb.is_subset(&self.xa),
            xa_inside_neighbor_columns: self.xa.is_subset(&neighbor_columns),
            xa_avoids_a_columns: self.xa.is_disjoint(&a_columns),
            xa_undominated_by_j1: self.xa.is_disjoint(&closed_neighborhood(&p, &self.j1)?),
            xb_undominated_by_j2: self.xb.is_disjoint(&closed_neighborhood(&p, &self.j2)?),
            l_maximal_in_xb: maximal_within(&p, &self.l, &self.xb),
            m_extends_l_maximal_in_xa: self.l.is_subset(&self.m)
                && maximal_within(&p, &self.m, &self.xa),
            j1_j2_gap_is_a_b_gap: self.j1.len() - self.j2.len() == self.a.len() - self.b.len(),
            big_maximal: is_maximal_independent(&p, &self.big)?,
            small_maximal: is_maximal_independent(&p, &self.small)?,
            big_larger: self.big.len() > self.small.len(),
        })
    }
}

/// Inputs for [`build_product_witness`] when `G` has an isolatable vertex and
/// `H` is not well-covered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem31Inputs {
    pub iso: IsolatableWitness,
    pub a: VertexSet,
    pub b: VertexSet,
}

/// First isolatable witness of `G` together with `A` = first maximum and
/// `B` = first minimum maximal independent set of `H`, when `H` is not
/// well-covered.
pub fn theorem31_applies(g: &Graph, h: &Graph, caps: &Caps) -> Result<Option<Theorem31Inputs>> {
    let Some(iso) = isolatable_vertices(g, caps)?.into_iter().next() else {
        return Ok(None);
    };
    let report = is_well_covered(h, caps)?;
    if report.well_covered {
        return Ok(None);
    }
    Ok(Some(Theorem31Inputs {
        iso,
        a: report.witness_max,
        b: report.witness_min,
    }))
}

/// Which factor supplied the isolatable vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Witness lives in `G □ H`.
    GIsolatable,
    /// Witness lives in `H □ G`.
    HIsolatable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientedWitness {
    pub orientation: Orientation,
    pub witness: ProductWitness,
    pub checks: WitnessChecks,
}

/// Tries `G` as the isolatable factor first, then `H`.
pub fn oriented_witness(g: &Graph, h: &Graph, caps: &Caps) -> Result<Option<OrientedWitness>> {
    for (orientation, first, second) in [
        (Orientation::GIsolatable, g, h),
        (Orientation::HIsolatable, h, g),
    ] {
        if let Some(inputs) = theorem31_applies(first, second, caps)? {
            let witness =
                build_product_witness(first, &inputs.iso, second, &inputs.a, &inputs.b, caps)?;
            let checks = witness.verify(first, second, caps)?;
            return Ok(Some(OrientedWitness {
                orientation,
                witness,
                checks,
            }));
        }
    }
    Ok(None)
}

/// Properties of one factor's maximal independent sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointnessProperties {
    /// Every maximal independent set is disjoint from some other one.
    pub every_set_has_disjoint_partner: bool,
    pub set_without_partner: Option<VertexSet>,
    /// Any two disjoint maximal independent sets have the same size.
    pub disjoint_pairs_equal_size: bool,
    pub unequal_disjoint_pair: Option<(VertexSet, VertexSet)>,
}

pub fn disjointness_properties(g: &Graph, caps: &Caps) -> Result<DisjointnessProperties> {
    let sets: Vec<u64> = {
        let mut it = enumerate_maximal_independent_sets(g, caps)?;
        std::iter::from_fn(|| it.next_mask()).collect()
    };
    let n = g.order();
    let without_partner = sets
        .iter()
        .find(|&&s| !sets.iter().any(|&t| s & t == 0))
        .map(|&s| VertexSet::from_mask(n, s));
    let unequal = sets.iter().enumerate().find_map(|(k, &s)| {
        sets[k + 1..]
            .iter()
            .find(|&&t| s & t == 0 && s.count_ones() != t.count_ones())
            .map(|&t| (VertexSet::from_mask(n, s), VertexSet::from_mask(n, t)))
    });
    Ok(DisjointnessProperties {
        every_set_has_disjoint_partner: without_partner.is_none(),
        set_without_partner: without_partner,
        disjoint_pairs_equal_size: unequal.is_none(),
        unequal_disjoint_pair: unequal,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum Lemma32Report {
    /// Some factor has an isolatable vertex, or the product is not well-covered.
    HypothesesNotMet {
        g_has_isolatable: bool,
        h_has_isolatable: bool,
        product_well_covered: bool,
    },
    Checked {
        g: DisjointnessProperties,
        h: DisjointnessProperties,
        /// Both factors have disjoint partners and at least one has equal-size
        /// disjoint pairs.
        holds: bool,
    },
}

impl Lemma32Report {
    /// `None` when the hypotheses were not met.
    pub fn holds(&self) -> Option<bool> {
        match self {
            Lemma32Report::HypothesesNotMet { .. } => None,
            Lemma32Report::Checked { holds, .. } => Some(*holds),
        }
    }
}

/// When neither factor has an isolatable vertex and `G □ H` is well-covered,
/// checks that every maximal independent set of each factor has a disjoint
/// partner and that at least one factor has all disjoint pairs equal in size.
pub fn check_lemma_3_2(g: &Graph, h: &Graph, caps: &Caps) -> Result<Lemma32Report> {
    let g_iso = !isolatable_vertices(g, caps)?.is_empty();
    let h_iso = !isolatable_vertices(h, caps)?.is_empty();
    let (p, _) = cartesian_product(g, h, caps)?;
    let product_wc = if g_iso || h_iso {
        // reported for context only
        check_well_covered(&p, caps).unwrap_or(false)
    } else {
        check_well_covered(&p, caps)?
    };
    if g_iso || h_iso || !product_wc {
        return Ok(Lemma32Report::HypothesesNotMet {
            g_has_isolatable: g_iso,
            h_has_isolatable: h_iso,
            product_well_covered: product_wc,
        });
    }
    let gp = disjointness_properties(g, caps)?;
    let hp = disjointness_properties(h, caps)?;
    let holds = gp.every_set_has_disjoint_partner
        && hp.every_set_has_disjoint_partner
        && (gp.disjoint_pairs_equal_size || hp.disjoint_pairs_equal_size);
    Ok(Lemma32Report::Checked { g: gp, h: hp, holds })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub g_report: WellCoveredReport,
    pub h_report: WellCoveredReport,
    pub product_report: WellCoveredReport,
}

/// Everything known about one factor pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub g_report: WellCoveredReport,
    pub h_report: WellCoveredReport,
    pub product_report: WellCoveredReport,
    pub g_isolatable: Vec<IsolatableWitness>,
    pub h_isolatable: Vec<IsolatableWitness>,
    /// False only when the product is well-covered and neither factor is.
    pub theorem_consistent: bool,
    pub violation: Option<Violation>,
    /// Present when one factor has an isolatable vertex and the other is not
    /// well-covered.
    pub witness: Option<OrientedWitness>,
}

impl PairVerdict {
    /// Whether the constructive witness (if any) agrees with enumeration.
    pub fn witness_agrees(&self) -> Option<bool> {
        self.witness
            .as_ref()
            .map(|w| w.checks.all() && !self.product_report.well_covered)
    }
}

/// Enumerates both factors and the product and checks that a well-covered
/// product has a well-covered factor.
pub fn verify_main_theorem(g: &Graph, h: &Graph, caps: &Caps) -> Result<PairVerdict> {
    let (p, _) = cartesian_product(g, h, caps)?;
    if p.order() > caps.enumeration {
        return Err(Error::CapExceeded {
            what: "product enumeration",
            size: p.order(),
            cap: caps.enumeration,
        });
    }
    let g_report = is_well_covered(g, caps)?;
    let h_report = is_well_covered(h, caps)?;
    let product_report = is_well_covered(&p, caps)?;
    let theorem_consistent =
        !(product_report.well_covered && !g_report.well_covered && !h_report.well_covered);
    let violation = (!theorem_consistent).then(|| Violation {
        g_report: g_report.clone(),
        h_report: h_report.clone(),
        product_report: product_report.clone(),
    });
    Ok(PairVerdict {
        g_isolatable: isolatable_vertices(g, caps)?,
        h_isolatable: isolatable_vertices(h, caps)?,
        witness: oriented_witness(g, h, caps)?,
        g_report,
        h_report,
        product_report,
        theorem_consistent,
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn p3_grid_witness() {
        let caps = Caps::default();
        let p3 = Graph::path(3);
        let iso = IsolatableWitness {
            x: 2,
            set: set(3, &[0]),
        };
        let w = build_product_witness(&p3, &iso, &p3, &set(3, &[0, 2]), &set(3, &[1]), &caps)
            .unwrap();
        let pairs = |s: &VertexSet| w.map.pairs(s);
        assert_eq!(pairs(&w.j), vec![(0, 0), (0, 2)]);
        assert_eq!((w.j1.len(), w.j2.len()), (4, 3));
        assert_eq!(pairs(&w.xa), vec![(1, 1)]);
        assert!(w.xb.is_empty() && w.l.is_empty());
        assert_eq!(pairs(&w.m), vec![(1, 1)]);
        assert_eq!(pairs(&w.big), vec![(0, 0), (0, 2), (1, 1), (2, 0), (2, 2)]);
        assert_eq!(pairs(&w.small), vec![(0, 0), (0, 2), (2, 1)]);
        assert!(w.verify(&p3, &p3, &caps).unwrap().all());
    }

    #[test]
    fn k1_factor_degenerates() {
        let caps = Caps::default();
        let k1 = Graph::empty(1);
        let p3 = Graph::path(3);
        let iso = IsolatableWitness {
            x: 0,
            set: VertexSet::new(1),
        };
        let w = build_product_witness(&k1, &iso, &p3, &set(3, &[0, 2]), &set(3, &[1]), &caps)
            .unwrap();
        assert!(w.j.is_empty() && w.xa.is_empty() && w.xb.is_empty());
        assert_eq!((w.big.len(), w.small.len()), (2, 1));
        assert!(w.verify(&k1, &p3, &caps).unwrap().all());
    }

    #[test]
    fn c6_square_witness() {
        let caps = Caps::default();
        let c6 = Graph::cycle(6);
        let iso = IsolatableWitness {
            x: 4,
            set: set(6, &[0, 2]),
        };
        let w = build_product_witness(&c6, &iso, &c6, &set(6, &[0, 2, 4]), &set(6, &[0, 3]), &caps)
            .unwrap();
        let checks = w.verify(&c6, &c6, &caps).unwrap();
        assert!(checks.all(), "{checks:?}");
        assert!(w.big.len() > w.small.len());
    }

    #[test]
    fn witness_preconditions() {
        let caps = Caps::default();
        let p3 = Graph::path(3);
        let iso = IsolatableWitness {
            x: 2,
            set: set(3, &[0]),
        };
        let a = set(3, &[0, 2]);
        let b = set(3, &[1]);
        assert!(matches!(
            build_product_witness(&p3, &iso, &p3, &b, &a, &caps),
            Err(Error::SizesNotOrdered { .. })
        ));
        assert_eq!(
            build_product_witness(&p3, &iso, &p3, &set(3, &[0]), &b, &caps),
            Err(Error::NotMaximalIndependent)
        );
        let bad = IsolatableWitness {
            x: 1,
            set: VertexSet::new(3),
        };
        assert!(matches!(
            build_product_witness(&p3, &bad, &p3, &a, &b, &caps),
            Err(Error::InvalidIsolatable { .. })
        ));
    }

    #[test]
    fn theorem31_examples() {
        let caps = Caps::default();
        let p3 = Graph::path(3);
        let found = theorem31_applies(&p3, &p3, &caps).unwrap().unwrap();
        assert_eq!((found.iso.x, found.iso.set.to_vec()), (0, vec![2]));
        assert_eq!((found.a.to_vec(), found.b.to_vec()), (vec![0, 2], vec![1]));
        assert!(theorem31_applies(&Graph::cycle(5), &p3, &caps).unwrap().is_none());
        assert!(theorem31_applies(&p3, &Graph::cycle(4), &caps).unwrap().is_none());
    }

    #[test]
    fn lemma_3_2_examples() {
        let caps = Caps::default();
        let k2 = Graph::complete(2);
        match check_lemma_3_2(&k2, &k2, &caps).unwrap() {
            Lemma32Report::Checked { g, h, holds } => {
                assert!(holds);
                for f in [g, h] {
                    assert!(f.every_set_has_disjoint_partner && f.disjoint_pairs_equal_size);
                }
            }
            other => panic!("unexpected {other:?}"),
        }
        let p3 = Graph::path(3);
        assert_eq!(check_lemma_3_2(&p3, &p3, &caps).unwrap().holds(), None);
        let c4 = Graph::cycle(4);
        assert!(matches!(
            check_lemma_3_2(&c4, &c4, &caps).unwrap(),
            Lemma32Report::HypothesesNotMet {
                g_has_isolatable: true,
                h_has_isolatable: true,
                ..
            }
        ));
    }

    #[test]
    fn disjointness_of_p3() {
        let d = disjointness_properties(&Graph::path(3), &Caps::default()).unwrap();
        assert!(d.every_set_has_disjoint_partner);
        assert!(!d.disjoint_pairs_equal_size);
        let (s, t) = d.unequal_disjoint_pair.unwrap();
        assert_eq!((s.to_vec(), t.to_vec()), (vec![0, 2], vec![1]));
    }

    #[test]
    fn main_theorem_examples() {
        let caps = Caps::default();
        let p3 = Graph::path(3);
        let v = verify_main_theorem(&p3, &p3, &caps).unwrap();
        assert!(!v.product_report.well_covered);
        assert_eq!((v.product_report.alpha, v.product_report.min_maximal), (5, 3));
        assert!(v.theorem_consistent && v.violation.is_none());
        assert_eq!(v.witness_agrees(), Some(true));

        let k2 = Graph::complete(2);
        let v = verify_main_theorem(&k2, &k2, &caps).unwrap();
        assert!(v.product_report.well_covered && v.g_report.well_covered);
        assert!(v.theorem_consistent && v.witness.is_none());

        let v = verify_main_theorem(&Graph::cycle(4), &p3, &caps).unwrap();
        assert!(v.theorem_consistent);
        let w = v.witness.unwrap();
        assert_eq!(w.orientation, Orientation::GIsolatable);
        assert!(w.checks.all());

        let v = verify_main_theorem(&p3, &Graph::cycle(4), &caps).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.orientation, Orientation::HIsolatable);
        assert_eq!(w.witness.map, ProductIndexMap::new(4, 3));
        assert!(w.checks.all());
    }

    #[test]
    fn main_theorem_cap() {
        let caps = Caps::default();
        let c7 = Graph::cycle(7);
        assert!(matches!(
            verify_main_theorem(&c7, &c7, &caps),
            Err(Error::CapExceeded { size: 49, .. })
        ));
    }
}
