//! Directed graphs with loops allowed, plus strongly connected components and
//! topological sorting.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Directed graph on `0..n`. Loops are allowed, parallel arcs are not.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    out: Vec<FixedBitSet>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            out: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(),
        }
    }

    /// Builds from 0-based arcs. Duplicate arcs are an error.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::new(n);
        for &(u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, vertex_count: n });
                }
            }
            if d.has_arc(u, v) {
                return Err(Error::DuplicateArc(u, v));
            }
            d.add_arc(u, v);
        }
        Ok(d)
    }

    /// The complete symmetric digraph on `n` vertices, loops included.
    pub fn full(n: usize) -> Self {
        let mut d = Digraph::new(n);
        for row in &mut d.out {
            row.insert_range(..);
        }
        d
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.out[u].insert(v);
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) {
        self.out[u].set(v, false);
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_arc(v, v)
    }

    /// All heads of arcs leaving `v`, the loop included.
    pub fn successors(&self, v: usize) -> &FixedBitSet {
        &self.out[v]
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().map(move |v| (u, v)))
    }

    /// Out-neighbourhood without `v` itself.
    pub fn out_neighborhood(&self, v: usize) -> BTreeSet<usize> {
        self.out[v].ones().filter(|&w| w != v).collect()
    }

    /// In-neighbourhood without `v` itself.
    pub fn in_neighborhood(&self, v: usize) -> BTreeSet<usize> {
        (0..self.vertex_count())
            .filter(|&u| u != v && self.has_arc(u, v))
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs().all(|(u, v)| self.has_arc(v, u))
    }

    /// Complement over the full relation, loops included.
    pub fn complement(&self) -> Digraph {
        let mut d = Digraph::full(self.vertex_count());
        for (u, v) in self.arcs() {
            d.remove_arc(u, v);
        }
        d
    }

    pub fn reverse(&self) -> Digraph {
        let mut d = Digraph::new(self.vertex_count());
        for (u, v) in self.arcs() {
            d.add_arc(v, u);
        }
        d
    }

    /// Connected components of the underlying undirected graph.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut und = crate::graph::Graph::new(n);
        for (u, v) in self.arcs() {
            if u != v {
                und.add_edge(u, v);
            }
        }
        und.components()
    }

    /// Tarjan's algorithm, iterative. Component ids are numbered so that every
    /// arc between different components goes from a lower id to a higher one.
    pub fn scc_condensation(&self) -> Condensation {
        let n = self.vertex_count();
        const UNVISITED: usize = usize::MAX;
        let mut index = vec![UNVISITED; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut raw_comp = vec![UNVISITED; n];
        let mut comp_count = 0usize;
        let mut next_index = 0usize;
        let succ: Vec<Vec<usize>> = self.out.iter().map(|r| r.ones().collect()).collect();

        for root in 0..n {
            if index[root] != UNVISITED {
                continue;
            }
            let mut call: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if *pos < succ[v].len() {
                    let w = succ[v][*pos];
                    *pos += 1;
                    if index[w] == UNVISITED {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(parent, _)) = call.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        loop {
                            let w = stack.pop().unwrap();
                            on_stack[w] = false;
                            raw_comp[w] = comp_count;
                            if w == v {
                                break;
                            }
                        }
                        comp_count += 1;
                    }
                }
            }
        }

        // Tarjan emits components in reverse topological order.
        let component: Vec<usize> = raw_comp.iter().map(|&c| comp_count - 1 - c).collect();
        let mut members = vec![Vec::new(); comp_count];
        for (v, &c) in component.iter().enumerate() {
            members[c].push(v);
        }
        let mut dag = Digraph::new(comp_count);
        for (u, v) in self.arcs() {
            let (cu, cv) = (component[u], component[v]);
            if cu != cv {
                dag.add_arc(cu, cv);
            }
        }
        Condensation { component, members, dag }
    }

    /// Kahn's algorithm with smallest-id tie breaking, or a directed cycle.
    pub fn topological_sort(&self) -> TopoSort {
        let n = self.vertex_count();
        if let Some(v) = (0..n).find(|&v| self.has_loop(v)) {
            return TopoSort::Cycle(vec![(v, v)]);
        }
        let mut indeg = vec![0usize; n];
        for (_, v) in self.arcs() {
            indeg[v] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for w in self.out[v].ones() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        if order.len() == n {
            return TopoSort::Order(order);
        }
        TopoSort::Cycle(self.find_cycle(&indeg))
    }

    // Every vertex left with positive in-degree after Kahn has a predecessor
    // that is also left, so walking predecessors must revisit a vertex.
    fn find_cycle(&self, indeg: &[usize]) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let left: Vec<bool> = indeg.iter().map(|&d| d > 0).collect();
        let start = (0..n).find(|&v| left[v]).expect("cycle exists");
        let pred = |v: usize| (0..n).find(|&u| left[u] && self.has_arc(u, v)).unwrap();
        let mut seen = vec![usize::MAX; n];
        let mut walk = vec![start];
        seen[start] = 0;
        loop {
            let p = pred(*walk.last().unwrap());
            if seen[p] != usize::MAX {
                let cyc: Vec<usize> = walk[seen[p]..].iter().rev().copied().collect();
                return cyc
                    .iter()
                    .enumerate()
                    .map(|(i, &u)| (u, cyc[(i + 1) % cyc.len()]))
                    .collect();
            }
            seen[p] = walk.len();
            walk.push(p);
        }
    }

    pub fn is_acyclic(&self) -> bool {
        matches!(self.topological_sort(), TopoSort::Order(_))
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph({}; ", self.vertex_count())?;
        f.debug_list().entries(self.arcs()).finish()?;
        write!(f, ")")
    }
}

/// Strongly connected components and the acyclic quotient digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condensation {
    /// Component id of every vertex.
    pub component: Vec<usize>,
    /// Vertices of every component, ascending.
    pub members: Vec<Vec<usize>>,
    /// Quotient digraph; arcs only go from lower to higher ids.
    pub dag: Digraph,
}

impl Condensation {
    pub fn component_count(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopoSort {
    Order(Vec<usize>),
    /// Arcs of a directed cycle, each arc's head is the next arc's tail.
    Cycle(Vec<(usize, usize)>),
}

pub fn scc_condensation(d: &Digraph) -> Condensation {
    d.scc_condensation()
}

pub fn topological_sort(d: &Digraph) -> TopoSort {
    d.topological_sort()
}

pub fn complement_digraph(h: &Digraph) -> Digraph {
    h.complement()
}
