use crate::graph::Graph;

/// An embedding `φ` of `pattern` into `g` as an induced subgraph:
/// `φ[i]` is the host vertex for pattern vertex `i`.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let (n, m) = (g.vertex_count(), pattern.vertex_count());
    if m > n {
        return None;
    }
    if m == 0 {
        return Some(Vec::new());
    }
    let host_deg = g.degrees();
    let pat_deg = pattern.degrees();
    // Host vertex must have room for the pattern vertex's neighbours and non-neighbours.
    let fits = |p: usize, h: usize| host_deg[h] >= pat_deg[p] && (n - 1 - host_deg[h]) >= (m - 1 - pat_deg[p]);
    // Most constrained pattern vertices first.
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&p| (std::cmp::Reverse(pat_deg[p].max(m - 1 - pat_deg[p])), p));
    let mut map = vec![usize::MAX; m];
    let mut used = vec![false; n];
    if extend(g, pattern, &order, 0, &fits, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    fits: &dyn Fn(usize, usize) -> bool,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    for h in 0..g.vertex_count() {
        if used[h] || !fits(p, h) {
            continue;
        }
        let consistent =
            order[..depth].iter().all(|&q| pattern.has_edge(p, q) == g.has_edge(h, map[q]));
        if !consistent {
            continue;
        }
        map[p] = h;
        used[h] = true;
        if extend(g, pattern, order, depth + 1, fits, map, used) {
            return true;
        }
        used[h] = false;
        map[p] = usize::MAX;
    }
    false
}
