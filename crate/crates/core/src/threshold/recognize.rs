use std::fmt;

use super::fdigraph::{test_partition, ThresholdRepresentation};
use super::Partition;
use crate::error::{Error, Result};
use crate::graph::{Graph, TwoColoring};

/// Peels isolated and dominating vertices. Returns the split partition
/// `(dominating, isolated)` when the whole graph peels away.
pub fn threshold_partition(g: &Graph) -> Option<Partition> {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut deg = g.degrees();
    let mut left = n;
    let mut parts = vec![Vec::new(), Vec::new()];
    while left > 0 {
        let v = (0..n).find(|&v| alive[v] && (deg[v] == 0 || deg[v] == left - 1))?;
        parts[usize::from(deg[v] == 0)].push(v);
        alive[v] = false;
        left -= 1;
        for w in g.neighbors(v).ones() {
            deg[w] -= 1;
        }
    }
    Some(Partition::new(n, parts).expect("every vertex peeled once"))
}

/// Whether neighbourhoods are totally preordered by `N(u) ⊆ N[v]`.
pub fn is_threshold(g: &Graph) -> bool {
    threshold_partition(g).is_some()
}

/// A bipartition `(A, B)` with both families of cross neighbourhoods nested.
/// Isolated vertices go to `A`.
pub fn difference_bipartition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.vertex_count();
    let nontrivial: Vec<Vec<usize>> = g.components().into_iter().filter(|c| c.len() > 1).collect();
    if nontrivial.len() > 1 {
        return None;
    }
    let TwoColoring::Coloring(colour) = g.two_color() else {
        return None;
    };
    let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| !colour[v]);
    let nested = |side: &[usize]| {
        let mut by_degree = side.to_vec();
        by_degree.sort_by_key(|&v| g.degree(v));
        by_degree.windows(2).all(|w| g.neighbors(w[0]).is_subset(g.neighbors(w[1])))
    };
    if !nested(&a) || !nested(&b) {
        return None;
    }
    let (isolated, b): (Vec<usize>, Vec<usize>) = b.into_iter().partition(|&v| g.degree(v) == 0);
    let mut a = a;
    a.extend(isolated);
    a.sort_unstable();
    Some((a, b))
}

/// Bipartite with nested neighbourhoods on both sides.
pub fn is_difference(g: &Graph) -> bool {
    difference_bipartition(g).is_some()
}

/// Which recognizer certified width 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Threshold,
    Difference,
    CoThreshold,
    CoDifference,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Threshold => "threshold",
            Route::Difference => "difference",
            Route::CoThreshold => "co-threshold",
            Route::CoDifference => "co-difference",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Width2 {
    /// Complete or edgeless.
    One { representation: ThresholdRepresentation },
    Two { route: Route, partition: Partition, representation: ThresholdRepresentation },
    MoreThanTwo,
}

/// Width 1, width 2 with a certificate, or more than 2, using the threshold
/// and difference recognizers on `g` and its complement.
///
/// Errors with [`Error::Internal`] if a recognizer fires but the partition it
/// produced does not pass [`test_partition`].
pub fn recognize_width2(g: &Graph) -> Result<Width2> {
    let n = g.vertex_count();
    if g.is_complete() || g.edge_count() == 0 {
        let single = Partition::new(n, vec![(0..n).collect()]).expect("single part");
        let representation = certify(g, &single, "one part")?;
        return Ok(Width2::One { representation });
    }
    let co = g.complement();
    let routes: [(Route, &dyn Fn() -> Option<Partition>); 4] = [
        (Route::Threshold, &|| threshold_partition(g)),
        (Route::Difference, &|| difference_parts(g)),
        (Route::CoThreshold, &|| threshold_partition(&co)),
        (Route::CoDifference, &|| difference_parts(&co)),
    ];
    for (route, find) in routes {
        if let Some(partition) = find() {
            let representation = certify(g, &partition, &route.to_string())?;
            return Ok(Width2::Two { route, partition, representation });
        }
    }
    Ok(Width2::MoreThanTwo)
}

fn difference_parts(g: &Graph) -> Option<Partition> {
    let (a, b) = difference_bipartition(g)?;
    Some(Partition::new(g.vertex_count(), vec![a, b]).expect("bipartition"))
}

fn certify(g: &Graph, p: &Partition, what: &str) -> Result<ThresholdRepresentation> {
    test_partition(g, p).map_err(|e| Error::Internal(format!("{what} partition rejected: {e}")))
}
