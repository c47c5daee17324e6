use std::collections::BTreeSet;

use super::{Direction, OrderingCertificate};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, TwoColoring};

/// For every class `i`, an unordered pair of disjoint sets `{X^i_1, X^i_2}`
/// of other classes, meant as its in- and out-neighbourhood in some digraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    sets: Vec<[BTreeSet<usize>; 2]>,
}

impl Family {
    /// Checks that the family is proper: whenever `j` is listed for `i`,
    /// `i` is listed for `j`.
    pub fn new(sets: Vec<[BTreeSet<usize>; 2]>) -> Result<Self> {
        let k = sets.len();
        for (i, [a, b]) in sets.iter().enumerate() {
            if a.contains(&i) || b.contains(&i) {
                return Err(Error::InvalidFamily(format!("class {} lists itself", i + 1)));
            }
            if let Some(&j) = a.intersection(b).next() {
                return Err(Error::InvalidFamily(format!("class {} lists {} twice", i + 1, j + 1)));
            }
            if let Some(&j) = a.iter().chain(b).find(|&&j| j >= k) {
                return Err(Error::InvalidFamily(format!("class {} lists unknown class {}", i + 1, j + 1)));
            }
        }
        for (i, [a, b]) in sets.iter().enumerate() {
            for &j in a.iter().chain(b) {
                if !sets[j][0].contains(&i) && !sets[j][1].contains(&i) {
                    return Err(Error::NotProper { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(Family { sets })
    }

    /// `X^i_1` holds the descending targets of part `i`, `X^i_2` the
    /// ascending ones; full and empty pairs are left out.
    pub fn from_certificate(cert: &OrderingCertificate) -> Family {
        let k = cert.part_count();
        let sets = (0..k)
            .map(|i| {
                let pick = |d: Direction| (0..k).filter(|&j| j != i && cert.directions[i][j] == d).collect();
                [pick(Direction::Descending), pick(Direction::Ascending)]
            })
            .collect();
        Family::new(sets).expect("nontrivial pairs are symmetric")
    }

    pub fn class_count(&self) -> usize {
        self.sets.len()
    }

    /// `X^i_{q+1}` for `q ∈ {0, 1}`.
    pub fn set(&self, i: usize, q: usize) -> &BTreeSet<usize> {
        &self.sets[i][q]
    }

    /// Whether `d` has `{N_in(i), N_out(i)} = {X^i_1, X^i_2}` for every `i`
    /// and no loops.
    pub fn is_realized_by(&self, d: &Digraph) -> bool {
        self.first_unrealized(d).is_none()
    }

    pub(super) fn first_unrealized(&self, d: &Digraph) -> Option<usize> {
        if d.vertex_count() != self.class_count() {
            return Some(0);
        }
        (0..self.class_count()).find(|&i| {
            let (out, inn) = (d.out_neighborhood(i), d.in_neighborhood(i));
            let [a, b] = &self.sets[i];
            d.has_loop(i) || !((out == *a && inn == *b) || (out == *b && inn == *a))
        })
    }
}

/// The family read off a certificate.
pub fn build_family(cert: &OrderingCertificate) -> Family {
    Family::from_certificate(cert)
}

/// Slot `X^i_q` is vertex `2i + q`. Slots of one class are adjacent, and
/// `X^i_q ∼ X^j_p` when `j ∈ X^i_q` and `i ∈ X^j_p`.
pub fn build_r(f: &Family) -> Graph {
    let k = f.class_count();
    let mut r = Graph::new(2 * k);
    for i in 0..k {
        r.add_edge(2 * i, 2 * i + 1);
        for q in 0..2 {
            for &j in f.set(i, q) {
                for p in 0..2 {
                    if j > i && f.set(j, p).contains(&i) {
                        r.add_edge(2 * i + q, 2 * j + p);
                    }
                }
            }
        }
    }
    r
}

/// An odd cycle of `R(S)` as `(class, q)` slots; the family has no realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle(pub Vec<(usize, usize)>);

impl std::fmt::Display for OddCycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let slots: Vec<String> = self.0.iter().map(|(i, q)| format!("X{}_{}", i + 1, q + 1)).collect();
        write!(f, "odd cycle {}", slots.join(" "))
    }
}

fn colouring(f: &Family) -> std::result::Result<(Graph, Vec<bool>), OddCycle> {
    let r = build_r(f);
    match r.two_color() {
        TwoColoring::Coloring(c) => Ok((r, c)),
        TwoColoring::OddCycle(w) => Err(OddCycle(w.into_iter().map(|s| (s / 2, s % 2)).collect())),
    }
}

/// Slots coloured `false` become out-neighbourhoods.
fn digraph_from_colouring(f: &Family, colour: &[bool]) -> Digraph {
    let k = f.class_count();
    let mut d = Digraph::new(k);
    for i in 0..k {
        for q in 0..2 {
            if !colour[2 * i + q] {
                for &j in f.set(i, q) {
                    d.add_arc(i, j);
                }
            }
        }
    }
    d
}

/// A realization from a 2-colouring of `R(S)` where the lowest slot of every
/// component is an out-neighbourhood.
pub fn realize_family(f: &Family) -> std::result::Result<Digraph, OddCycle> {
    let (_, colour) = colouring(f)?;
    Ok(digraph_from_colouring(f, &colour))
}

/// All distinct realizations, one per choice of colouring on each component
/// of `R(S)` that carries a nonempty slot.
pub fn realizations(f: &Family) -> std::result::Result<Vec<Digraph>, OddCycle> {
    let (r, colour) = colouring(f)?;
    let active: Vec<Vec<usize>> = r
        .components()
        .into_iter()
        .filter(|comp| comp.iter().any(|&s| !f.set(s / 2, s % 2).is_empty()))
        .collect();
    let mut out = Vec::with_capacity(1 << active.len());
    for mask in 0u64..1 << active.len() {
        let mut c = colour.clone();
        for (b, comp) in active.iter().enumerate() {
            if mask >> b & 1 == 1 {
                for &s in comp {
                    c[s] = !c[s];
                }
            }
        }
        out.push(digraph_from_colouring(f, &c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn family(sets: &[(&[usize], &[usize])]) -> Family {
        Family::new(sets.iter().map(|(a, b)| [a.iter().copied().collect(), b.iter().copied().collect()]).collect())
            .unwrap()
    }

    #[test]
    fn empty_family() {
        let f = family(&[(&[], &[]), (&[], &[])]);
        let r = build_r(&f);
        assert_eq!(r.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        let d = realize_family(&f).unwrap();
        assert_eq!(d.arc_count(), 0);
        assert_eq!(realizations(&f).unwrap().len(), 1);
    }

    #[test]
    fn split_family_realized_by_single_arc() {
        let f = family(&[(&[], &[1]), (&[0], &[])]);
        let r = build_r(&f);
        assert!(r.two_color().coloring().is_some());
        let all = realizations(&f).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.contains(&Digraph::from_arcs(2, &[(0, 1)]).unwrap()));
        assert!(all.contains(&Digraph::from_arcs(2, &[(1, 0)]).unwrap()));
        assert!(all.iter().all(|d| f.is_realized_by(d)));
    }

    #[test]
    fn improper_family_rejected() {
        let sets = vec![[BTreeSet::from([1]), BTreeSet::new()], [BTreeSet::new(), BTreeSet::new()]];
        assert_eq!(Family::new(sets), Err(Error::NotProper { i: 1, j: 2 }));
    }

    #[test]
    fn odd_cycle_witness() {
        // A directed triangle needs 1 -> 2 -> 3 -> 1; asking each class to have
        // both others in the same set is impossible.
        let f = family(&[(&[1, 2], &[]), (&[0, 2], &[]), (&[0, 1], &[])]);
        let err = realize_family(&f).unwrap_err();
        assert!(err.0.len() % 2 == 1);
    }

    #[test]
    fn two_components_give_four_realizations() {
        let f = family(&[(&[1], &[]), (&[], &[0]), (&[3], &[]), (&[], &[2])]);
        let all = realizations(&f).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|d| f.is_realized_by(d)));
    }

    /// Family of a digraph's in/out neighbourhoods, in a random slot order.
    fn family_of(d: &Digraph, swaps: &[bool]) -> Family {
        let sets = (0..d.vertex_count())
            .map(|i| {
                let (o, n) = (d.out_neighborhood(i), d.in_neighborhood(i));
                if swaps[i] { [n, o] } else { [o, n] }
            })
            .collect();
        Family::new(sets).unwrap()
    }

    proptest! {
        #[test]
        fn realizable_families_realize(arcs in proptest::collection::vec((0usize..5, 0usize..5), 0..8), swaps in proptest::collection::vec(any::<bool>(), 5)) {
            // Oriented simple digraph: keep one direction per pair, no loops.
            let mut d = Digraph::new(5);
            for (u, v) in arcs {
                if u != v && !d.has_arc(v, u) {
                    d.add_arc(u, v);
                }
            }
            let f = family_of(&d, &swaps);
            let all = realizations(&f).unwrap();
            prop_assert!(all.contains(&d));
            for r in &all {
                prop_assert!(f.is_realized_by(r));
            }
        }
    }
}
