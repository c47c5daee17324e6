use fixedbitset::FixedBitSet;
use thiserror::Error;

use super::{ClassKind, Direction, Partition};
use crate::graph::Graph;

/// A partition into cliques and independent sets, a permutation `ψ(i)` of
/// every part, and the direction in which each part sees each other part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingCertificate {
    pub partition: Partition,
    pub kinds: Vec<ClassKind>,
    pub psi: Vec<Vec<usize>>,
    /// `directions[i][j]` for `i ≠ j`. The diagonal holds `Full` for cliques
    /// with at least two vertices and `Empty` otherwise.
    pub directions: Vec<Vec<Direction>>,
}

impl OrderingCertificate {
    pub fn part_count(&self) -> usize {
        self.partition.part_count()
    }

    /// Re-checks every stated kind and inclusion chain against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.part_count();
        let masks = part_masks(g, &self.partition);
        (0..k).all(|i| {
            let part = self.partition.part(i);
            let kind_ok = match self.kinds[i] {
                ClassKind::Clique => g.is_clique(part),
                ClassKind::Independent => g.is_independent(part),
            };
            let mut sorted = self.psi[i].clone();
            sorted.sort_unstable();
            kind_ok
                && sorted == part
                && (0..k).filter(|&j| j != i).all(|j| {
                    let nbrs: Vec<FixedBitSet> = self.psi[i].iter().map(|&u| restricted(g, u, &masks[j])).collect();
                    let full = nbrs.iter().all(|s| s.count_ones(..) == self.partition.part(j).len());
                    let none = nbrs.iter().all(|s| s.is_clear());
                    match self.directions[i][j] {
                        Direction::Full => full,
                        Direction::Empty => none,
                        Direction::Descending => nbrs.windows(2).all(|w| w[1].is_subset(&w[0])),
                        Direction::Ascending => nbrs.windows(2).all(|w| w[0].is_subset(&w[1])),
                    }
                })
        })
    }
}

/// Why a partition has no neighbourhood-ordering certificate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderingFailure {
    #[error("part {} is neither a clique nor independent: {edge:?} is an edge, {non_edge:?} is not", part + 1)]
    MixedPart { part: usize, edge: (usize, usize), non_edge: (usize, usize) },
    #[error("in part {}, vertices {u} and {v} have incomparable neighbourhoods in part {}", part + 1, toward + 1)]
    Incomparable { part: usize, toward: usize, u: usize, v: usize },
    #[error("part {} cannot be ordered for parts {} and {} at once", part + 1, first + 1, second + 1)]
    Conflict { part: usize, first: usize, second: usize },
}

pub(super) fn part_masks(g: &Graph, p: &Partition) -> Vec<FixedBitSet> {
    p.parts()
        .iter()
        .map(|part| {
            let mut m = FixedBitSet::with_capacity(g.vertex_count());
            for &v in part {
                m.insert(v);
            }
            m
        })
        .collect()
}

fn restricted(g: &Graph, u: usize, mask: &FixedBitSet) -> FixedBitSet {
    let mut s = g.neighbors(u).clone();
    s.intersect_with(mask);
    s
}

/// Per-part data shared by every certificate of a partition.
#[derive(Debug, Clone)]
struct PartAnalysis {
    /// Nontrivial targets whose chain is strict somewhere, with their sizes
    /// `|N_{V_j}(u)|` listed in part order.
    ranked: Vec<(usize, Vec<u32>)>,
    /// Independent orientation choices: `(j, flipped)` lists. Flipping a unit
    /// reverses every target in it; targets with all neighbourhoods equal form
    /// units of their own.
    units: Vec<Vec<(usize, bool)>>,
}

/// First certificate found, or the reason none exists.
pub fn check_neighborhood_ordering(g: &Graph, p: &Partition) -> Result<OrderingCertificate, OrderingFailure> {
    Ok(ordering_certificates(g, p)?.next().expect("at least one certificate"))
}

/// Every certificate of `p`, up to reversing a whole part together with its
/// directions. Different certificates can yield different families and
/// digraphs `F`.
pub fn ordering_certificates(g: &Graph, p: &Partition) -> Result<Certificates, OrderingFailure> {
    let k = p.part_count();
    let masks = part_masks(g, p);
    let mut kinds = Vec::with_capacity(k);
    for i in 0..k {
        kinds.push(part_kind(g, p.part(i)).map_err(|(edge, non_edge)| OrderingFailure::MixedPart {
            part: i,
            edge,
            non_edge,
        })?);
    }
    let mut base = vec![vec![Direction::Empty; k]; k];
    for i in 0..k {
        base[i][i] = if kinds[i] == ClassKind::Clique { Direction::Full } else { Direction::Empty };
        for j in 0..k {
            if i == j || p.part(i).is_empty() || p.part(j).is_empty() {
                continue;
            }
            let edges: usize = p.part(i).iter().map(|&u| restricted(g, u, &masks[j]).count_ones(..)).sum();
            base[i][j] = if edges == 0 {
                Direction::Empty
            } else if edges == p.part(i).len() * p.part(j).len() {
                Direction::Full
            } else {
                // Placeholder until an orientation is chosen.
                Direction::Descending
            };
        }
    }
    let analyses = (0..k)
        .map(|i| analyze_part(g, p, &masks, &base, i))
        .collect::<Result<Vec<_>, _>>()?;
    let counter = vec![0u64; k];
    Ok(Certificates { partition: p.clone(), kinds, base, analyses, counter, done: false })
}

fn part_kind(g: &Graph, part: &[usize]) -> Result<ClassKind, ((usize, usize), (usize, usize))> {
    let mut edge = None;
    let mut non_edge = None;
    for (a, &u) in part.iter().enumerate() {
        for &v in &part[a + 1..] {
            if g.has_edge(u, v) {
                edge.get_or_insert((u, v));
            } else {
                non_edge.get_or_insert((u, v));
            }
        }
    }
    match (edge, non_edge) {
        (Some(e), Some(ne)) => Err((e, ne)),
        (Some(_), None) => Ok(ClassKind::Clique),
        _ => Ok(ClassKind::Independent),
    }
}

fn analyze_part(
    g: &Graph,
    p: &Partition,
    masks: &[FixedBitSet],
    base: &[Vec<Direction>],
    i: usize,
) -> Result<PartAnalysis, OrderingFailure> {
    let part = p.part(i);
    let mut ranked: Vec<(usize, Vec<u32>)> = Vec::new();
    let mut units: Vec<Vec<(usize, bool)>> = Vec::new();
    for j in (0..p.part_count()).filter(|&j| j != i && !base[i][j].is_trivial()) {
        let nbrs: Vec<FixedBitSet> = part.iter().map(|&u| restricted(g, u, &masks[j])).collect();
        for a in 0..nbrs.len() {
            for b in a + 1..nbrs.len() {
                if !nbrs[a].is_subset(&nbrs[b]) && !nbrs[b].is_subset(&nbrs[a]) {
                    return Err(OrderingFailure::Incomparable { part: i, toward: j, u: part[a], v: part[b] });
                }
            }
        }
        let sizes: Vec<u32> = nbrs.iter().map(|s| s.count_ones(..) as u32).collect();
        if sizes.iter().all(|&s| s == sizes[0]) {
            units.push(vec![(j, false)]);
        } else {
            ranked.push((j, sizes));
        }
    }

    // Parity constraints between ranked targets: `Some(false)` means the two
    // chains must run the same way, `Some(true)` opposite ways.
    let m = ranked.len();
    let mut forced: Vec<Vec<Option<bool>>> = vec![vec![None; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            let (sa, sb) = (&ranked[a].1, &ranked[b].1);
            let mut same_ok = true;
            let mut reverse_ok = true;
            for x in 0..part.len() {
                for y in 0..part.len() {
                    if sa[x] < sa[y] {
                        if sb[x] > sb[y] {
                            same_ok = false;
                        }
                        if sb[x] < sb[y] {
                            reverse_ok = false;
                        }
                    }
                }
            }
            let rel = match (same_ok, reverse_ok) {
                (false, false) => {
                    return Err(OrderingFailure::Conflict { part: i, first: ranked[a].0, second: ranked[b].0 })
                }
                (true, false) => Some(false),
                (false, true) => Some(true),
                (true, true) => None,
            };
            forced[a][b] = rel;
            forced[b][a] = rel;
        }
    }
    let mut flip: Vec<Option<bool>> = vec![None; m];
    let mut parity_units = Vec::new();
    for root in 0..m {
        if flip[root].is_some() {
            continue;
        }
        flip[root] = Some(false);
        let mut unit = vec![root];
        let mut stack = vec![root];
        while let Some(a) = stack.pop() {
            for b in 0..m {
                let Some(rel) = forced[a][b] else { continue };
                let want = flip[a].unwrap() ^ rel;
                match flip[b] {
                    None => {
                        flip[b] = Some(want);
                        unit.push(b);
                        stack.push(b);
                    }
                    Some(have) if have != want => {
                        return Err(OrderingFailure::Conflict { part: i, first: ranked[a].0, second: ranked[b].0 });
                    }
                    Some(_) => {}
                }
            }
        }
        unit.sort_unstable();
        parity_units.push(unit.into_iter().map(|a| (ranked[a].0, flip[a].unwrap())).collect());
    }
    parity_units.extend(units);
    Ok(PartAnalysis { ranked, units: parity_units })
}

/// Iterator over the certificates of one partition.
#[derive(Debug, Clone)]
pub struct Certificates {
    partition: Partition,
    kinds: Vec<ClassKind>,
    base: Vec<Vec<Direction>>,
    analyses: Vec<PartAnalysis>,
    counter: Vec<u64>,
    done: bool,
}

impl Certificates {
    fn choices(&self, i: usize) -> u64 {
        // The first unit stays fixed: flipping every unit of a part at once
        // only reverses `ψ(i)` and swaps its two sets.
        1u64 << self.analyses[i].units.len().saturating_sub(1).min(63)
    }

    fn build(&self) -> OrderingCertificate {
        let k = self.partition.part_count();
        let mut directions = self.base.clone();
        let mut psi = Vec::with_capacity(k);
        for i in 0..k {
            let an = &self.analyses[i];
            for (idx, unit) in an.units.iter().enumerate() {
                let unit_flip = idx > 0 && self.counter[i] >> (idx - 1) & 1 == 1;
                for &(j, f) in unit {
                    directions[i][j] = if unit_flip ^ f { Direction::Ascending } else { Direction::Descending };
                }
            }
            let part = self.partition.part(i);
            let mut order: Vec<(Vec<i64>, usize)> = (0..part.len())
                .map(|x| {
                    let key = an
                        .ranked
                        .iter()
                        .map(|(j, sizes)| match directions[i][*j] {
                            Direction::Descending => -(sizes[x] as i64),
                            _ => sizes[x] as i64,
                        })
                        .collect();
                    (key, part[x])
                })
                .collect();
            order.sort();
            psi.push(order.into_iter().map(|(_, v)| v).collect());
        }
        OrderingCertificate { partition: self.partition.clone(), kinds: self.kinds.clone(), psi, directions }
    }
}

impl Iterator for Certificates {
    type Item = OrderingCertificate;

    fn next(&mut self) -> Option<OrderingCertificate> {
        if self.done {
            return None;
        }
        let cert = self.build();
        let mut i = 0;
        loop {
            if i == self.counter.len() {
                self.done = true;
                break;
            }
            self.counter[i] += 1;
            if self.counter[i] < self.choices(i) {
                break;
            }
            self.counter[i] = 0;
            i += 1;
        }
        Some(cert)
    }
}
