//! Directed graphs on `[m]` with deterministic strongly-connected-component
//! output (components sorted by smallest member, members ascending).

use std::collections::BTreeSet;

/// A directed graph on nodes `0..n`. Edges are kept in a sorted set, so the
/// representation is independent of insertion order; self-loops allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl DiGraph {
    pub fn new(n: usize) -> Self {
        DiGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = DiGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge endpoint out of range");
        self.edges.insert((u, v));
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// True if `other` contains every edge of `self` (same node count).
    pub fn is_subgraph_of(&self, other: &DiGraph) -> bool {
        self.n == other.n && self.edges.is_subset(&other.edges)
    }

    fn successors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.range((u, 0)..(u + 1, 0)).map(|&(_, v)| v)
    }

    /// Tarjan's algorithm. Components are returned with members ascending,
    /// ordered by their smallest member.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        struct State<'g> {
            g: &'g DiGraph,
            index: usize,
            order: Vec<Option<usize>>,
            low: Vec<usize>,
            stack: Vec<usize>,
            on_stack: Vec<bool>,
            components: Vec<Vec<usize>>,
        }

        fn connect(v: usize, s: &mut State) {
            s.order[v] = Some(s.index);
            s.low[v] = s.index;
            s.index += 1;
            s.stack.push(v);
            s.on_stack[v] = true;
            let succ: Vec<usize> = s.g.successors(v).collect();
            for w in succ {
                if s.order[w].is_none() {
                    connect(w, s);
                    s.low[v] = s.low[v].min(s.low[w]);
                } else if s.on_stack[w] {
                    s.low[v] = s.low[v].min(s.order[w].expect("visited node has an order"));
                }
            }
            if s.low[v] == s.order[v].expect("v was just ordered") {
                let mut component = Vec::new();
                loop {
                    let w = s.stack.pop().expect("stack holds the component");
                    s.on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                component.sort_unstable();
                s.components.push(component);
            }
        }

        let mut state = State {
            g: self,
            index: 0,
            order: vec![None; self.n],
            low: vec![0; self.n],
            stack: Vec::new(),
            on_stack: vec![false; self.n],
            components: Vec::new(),
        };
        for v in 0..self.n {
            if state.order[v].is_none() {
                connect(v, &mut state);
            }
        }
        state.components.sort_by_key(|c| c[0]);
        state.components
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.strongly_connected_components().len() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_digraph_is_one_component() {
        let g = DiGraph::from_edges(3, (0..3).flat_map(|u| (0..3).map(move |v| (u, v))));
        assert_eq!(g.strongly_connected_components(), vec![vec![0, 1, 2]]);
        assert!(g.is_strongly_connected());
    }

    #[test]
    fn one_directed_edge_keeps_nodes_apart() {
        let g = DiGraph::from_edges(3, [(0, 1), (0, 0), (1, 1), (2, 2)]);
        assert_eq!(
            g.strongly_connected_components(),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn two_cycle_merges_and_tail_stays_separate() {
        let g = DiGraph::from_edges(3, [(0, 1), (1, 0), (1, 2)]);
        assert_eq!(g.strongly_connected_components(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn representation_ignores_insertion_order() {
        let a = DiGraph::from_edges(4, [(0, 1), (1, 2), (2, 0), (3, 3)]);
        let b = DiGraph::from_edges(4, [(3, 3), (2, 0), (0, 1), (1, 2)]);
        assert_eq!(a, b);
        assert_eq!(
            a.strongly_connected_components(),
            b.strongly_connected_components()
        );
    }
}
