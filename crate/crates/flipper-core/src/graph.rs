//! Graphs with bit-row adjacency.
//!
//! A graph owns a fixed identifier universe 0..universe and a set of live
//! vertices inside it. Induced subgraphs keep the original identifiers and
//! shrink only the live set, so vertices keep their names across
//! localizations and flips.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::set::{Vertex, VertexSet};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    universe: usize,
    live: VertexSet,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Graph on vertices 0..n with the given undirected edges.
    pub fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut rows = vec![VertexSet::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph { universe: n, live: VertexSet::full(n), rows })
    }

    pub fn empty(n: usize) -> Graph {
        Graph { universe: n, live: VertexSet::full(n), rows: vec![VertexSet::new(); n] }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn live(&self) -> &VertexSet {
        &self.live
    }

    /// Number of live vertices.
    pub fn order(&self) -> usize {
        self.live.len()
    }

    pub fn size(&self) -> usize {
        let deg_sum: usize = self.live.iter().map(|v| self.rows[v].len()).sum();
        deg_sum / 2
    }

    pub fn is_live(&self, v: Vertex) -> bool {
        self.live.contains(v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.universe && self.rows[u].contains(v)
    }

    /// Neighborhood of a live vertex.
    pub fn neighbors(&self, v: Vertex) -> Result<&VertexSet> {
        if !self.is_live(v) {
            return Err(Error::NotLive(v));
        }
        Ok(&self.rows[v])
    }

    /// Unchecked row access for internal loops; rows of dead vertices are
    /// kept empty.
    pub(crate) fn row(&self, v: Vertex) -> &VertexSet {
        &self.rows[v]
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut es = Vec::new();
        for u in self.live.iter() {
            for v in self.rows[u].iter() {
                if u < v {
                    es.push((u, v));
                }
            }
        }
        es
    }

    /// Subgraph induced by `w`, keeping identifiers. `w` must be live.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<Graph> {
        if !w.is_subset(&self.live) {
            return Err(Error::NotASubset);
        }
        let mut rows = vec![VertexSet::new(); self.universe];
        for v in w.iter() {
            rows[v] = self.rows[v].intersection(w);
        }
        Ok(Graph { universe: self.universe, live: w.clone(), rows })
    }

    /// Toggles adjacency between every pair of distinct live vertices
    /// (u, v) with u in `a`, v in `b` (or vice versa).
    pub(crate) fn toggle_between(&mut self, a: &VertexSet, b: &VertexSet) {
        let a = a.intersection(&self.live);
        let b = b.intersection(&self.live);
        if a.is_empty() || b.is_empty() {
            return;
        }
        for u in self.live.iter() {
            let mut mask = VertexSet::new();
            if a.contains(u) {
                mask.union_with(&b);
            }
            if b.contains(u) {
                mask.union_with(&a);
            }
            if mask.is_empty() {
                continue;
            }
            mask.remove(u);
            self.rows[u].symmetric_difference_with(&mask);
        }
    }

    /// Vertices at distance at most `r` from `v`.
    pub fn ball(&self, v: Vertex, r: usize) -> Result<VertexSet> {
        if !self.is_live(v) {
            return Err(Error::NotLive(v));
        }
        Ok(self.ball_of_set(&VertexSet::singleton(v), r))
    }

    /// Vertices at distance at most `r` from the (live part of the) set.
    pub fn ball_of_set(&self, sources: &VertexSet, r: usize) -> VertexSet {
        let mut reached = sources.intersection(&self.live);
        let mut frontier = reached.clone();
        for _ in 0..r {
            let mut next = VertexSet::new();
            for u in frontier.iter() {
                next.union_with(&self.rows[u]);
            }
            next.difference_with(&reached);
            if next.is_empty() {
                break;
            }
            reached.union_with(&next);
            frontier = next;
        }
        reached
    }

    /// Shortest-path distance; None when disconnected.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Option<usize>> {
        if !self.is_live(u) {
            return Err(Error::NotLive(u));
        }
        if !self.is_live(v) {
            return Err(Error::NotLive(v));
        }
        Ok(self.distance_bounded(u, v, usize::MAX))
    }

    /// Distance if it is at most `cap`, else None.
    pub fn distance_bounded(&self, u: Vertex, v: Vertex, cap: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut reached = VertexSet::singleton(u);
        let mut frontier = reached.clone();
        let mut d = 0;
        while d < cap {
            let mut next = VertexSet::new();
            for x in frontier.iter() {
                next.union_with(&self.rows[x]);
            }
            next.difference_with(&reached);
            if next.is_empty() {
                return None;
            }
            d += 1;
            if next.contains(v) {
                return Some(d);
            }
            reached.union_with(&next);
            frontier = next;
        }
        None
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    /// Renames vertices: new id of v is perm[v]. `perm` must be a
    /// permutation of 0..universe.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.universe {
            return Err(Error::InvalidOrder);
        }
        let mut seen = vec![false; self.universe];
        for &p in perm {
            if p >= self.universe || seen[p] {
                return Err(Error::InvalidOrder);
            }
            seen[p] = true;
        }
        let mut rows = vec![VertexSet::new(); self.universe];
        let mut live = VertexSet::new();
        for v in self.live.iter() {
            live.insert(perm[v]);
            rows[perm[v]] = self.rows[v].iter().map(|u| perm[u]).collect();
        }
        Ok(Graph { universe: self.universe, live, rows })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, universe={})", self.order(), self.size(), self.universe)
    }
}

// ---------------------------------------------------------------------------
// text format

impl Graph {
    /// Parses "n m" followed by m lines "u v"; '#' starts a comment.
    pub fn parse_text(input: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in input.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected two fields, got {}", fields.len()),
                });
            }
            let a: usize = fields[0].parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("invalid number '{}'", fields[0]),
            })?;
            let b: usize = fields[1].parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("invalid number '{}'", fields[1]),
            })?;
            if header.is_none() {
                header = Some((a, b));
            } else {
                edges.push((a, b, line_no));
            }
        }
        let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header announces {} edges, found {}", m, edges.len()),
            });
        }
        let mut g = Graph::empty(n);
        for (u, v, line_no) in edges {
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("endpoint out of range in '{} {}'", u, v),
                });
            }
            if u == v {
                return Err(Error::Parse { line: line_no, msg: format!("self-loop on {}", u) });
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.universe, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// generators

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Grid { rows: usize, cols: usize },
    Clique { n: usize },
    /// Vertices a_1..a_k (ids 0..k) and b_1..b_k (ids k..2k);
    /// edge a_i b_j iff i < j.
    HalfGraph { k: usize },
    /// K_n with every edge replaced by a path of length r+1
    /// (r fresh inner vertices per edge).
    SubdividedClique { n: usize, r: usize },
    RandomTree { n: usize, seed: u64 },
    BoundedDegreeRandom { n: usize, degree: usize, seed: u64 },
}

impl Family {
    /// Parses specs like "path:12", "grid:4x5", "grid:20",
    /// "subdivided_clique:5x2", "bounded_degree_random:40x3".
    /// `seed` feeds the random families.
    pub fn parse(spec: &str, seed: u64) -> Result<Family> {
        let (name, params) = match spec.split_once(':') {
            Some((n, p)) => (n, p),
            None => return Err(Error::UnknownFamily(spec.to_string())),
        };
        let one = |p: &str| -> Result<usize> {
            p.parse().map_err(|_| Error::UnknownFamily(spec.to_string()))
        };
        let two = |p: &str| -> Result<(usize, usize)> {
            let (a, b) = p.split_once('x').ok_or_else(|| Error::UnknownFamily(spec.to_string()))?;
            Ok((one(a)?, one(b)?))
        };
        Ok(match name {
            "path" => Family::Path { n: one(params)? },
            "cycle" => Family::Cycle { n: one(params)? },
            "grid" => {
                if params.contains('x') {
                    let (rows, cols) = two(params)?;
                    Family::Grid { rows, cols }
                } else {
                    let n = one(params)?;
                    let side = (n as f64).sqrt().floor().max(1.0) as usize;
                    Family::Grid { rows: side, cols: side }
                }
            }
            "clique" => Family::Clique { n: one(params)? },
            "half_graph" => Family::HalfGraph { k: one(params)? },
            "subdivided_clique" => {
                let (n, r) = two(params)?;
                Family::SubdividedClique { n, r }
            }
            "random_tree" => Family::RandomTree { n: one(params)?, seed },
            "bounded_degree_random" => {
                let (n, degree) = two(params)?;
                Family::BoundedDegreeRandom { n, degree, seed }
            }
            _ => return Err(Error::UnknownFamily(spec.to_string())),
        })
    }

    pub fn generate(&self) -> Result<Graph> {
        match *self {
            Family::Path { n } => {
                require(n >= 1, "path needs n >= 1")?;
                let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
                Graph::build(n, &edges)
            }
            Family::Cycle { n } => {
                require(n >= 3, "cycle needs n >= 3")?;
                let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
                edges.push((n - 1, 0));
                Graph::build(n, &edges)
            }
            Family::Grid { rows, cols } => {
                require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1")?;
                let id = |i: usize, j: usize| i * cols + j;
                let mut edges = Vec::new();
                for i in 0..rows {
                    for j in 0..cols {
                        if j + 1 < cols {
                            edges.push((id(i, j), id(i, j + 1)));
                        }
                        if i + 1 < rows {
                            edges.push((id(i, j), id(i + 1, j)));
                        }
                    }
                }
                Graph::build(rows * cols, &edges)
            }
            Family::Clique { n } => {
                require(n >= 1, "clique needs n >= 1")?;
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
                Graph::build(n, &edges)
            }
            Family::HalfGraph { k } => {
                require(k >= 1, "half_graph needs k >= 1")?;
                let mut edges = Vec::new();
                for i in 1..=k {
                    for j in i + 1..=k {
                        edges.push((i - 1, k + j - 1));
                    }
                }
                Graph::build(2 * k, &edges)
            }
            Family::SubdividedClique { n, r } => {
                require(n >= 1, "subdivided_clique needs n >= 1")?;
                let mut edges = Vec::new();
                let mut next = n;
                for u in 0..n {
                    for v in u + 1..n {
                        let mut prev = u;
                        for _ in 0..r {
                            edges.push((prev, next));
                            prev = next;
                            next += 1;
                        }
                        edges.push((prev, v));
                    }
                }
                Graph::build(next, &edges)
            }
            Family::RandomTree { n, seed } => {
                require(n >= 1, "random_tree needs n >= 1")?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let edges: Vec<_> =
                    (1..n).map(|v| (rng.random_range(0..v), v)).collect();
                Graph::build(n, &edges)
            }
            Family::BoundedDegreeRandom { n, degree, seed } => {
                require(n >= 1, "bounded_degree_random needs n >= 1")?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut deg = vec![0usize; n];
                let mut g = Graph::empty(n);
                for _ in 0..n.saturating_mul(degree) {
                    let u = rng.random_range(0..n);
                    let v = rng.random_range(0..n);
                    if u != v && !g.has_edge(u, v) && deg[u] < degree && deg[v] < degree {
                        g.rows[u].insert(v);
                        g.rows[v].insert(u);
                        deg[u] += 1;
                        deg[v] += 1;
                    }
                }
                Ok(g)
            }
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParams(msg.to_string()))
    }
}

// ---------------------------------------------------------------------------
// ladder detection

pub const DEFAULT_LADDER_NODE_CAP: u64 = 1_000_000;

impl Graph {
    /// Does the graph contain a ladder of order k: distinct vertices
    /// a_1..a_k, b_1..b_k with an edge a_i b_j exactly when i < j?
    /// Adjacency inside the a's and inside the b's is unconstrained.
    ///
    /// Backtracking search; errors when more than `node_cap` candidate
    /// placements are tried (default 10^6).
    pub fn ladder_order_at_least(&self, k: usize, node_cap: Option<u64>) -> Result<bool> {
        if k == 0 {
            return Ok(true);
        }
        if 2 * k > self.order() {
            return Ok(false);
        }
        let cap = node_cap.unwrap_or(DEFAULT_LADDER_NODE_CAP);
        let mut search = LadderSearch {
            g: self,
            k,
            a: Vec::with_capacity(k),
            b: Vec::with_capacity(k),
            used: VertexSet::new(),
            nodes: 0,
            cap,
        };
        search.place(0)
    }
}

struct LadderSearch<'a> {
    g: &'a Graph,
    k: usize,
    a: Vec<Vertex>,
    b: Vec<Vertex>,
    used: VertexSet,
    nodes: u64,
    cap: u64,
}

impl LadderSearch<'_> {
    /// Slots alternate a_1, b_1, a_2, b_2, ... so each placement is checked
    /// against everything already placed on the other side.
    fn place(&mut self, slot: usize) -> Result<bool> {
        if slot == 2 * self.k {
            return Ok(true);
        }
        let placing_a = slot.is_multiple_of(2);
        let idx = slot / 2; // 0-based index of the pair being placed
        for v in self.g.live.iter() {
            if self.used.contains(v) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(Error::BudgetExceeded("ladder search node cap"));
            }
            let ok = if placing_a {
                // a_{idx+1} vs placed b_1..b_idx: i < j never holds, so no edges
                self.b.iter().all(|&bj| !self.g.has_edge(v, bj))
            } else {
                // b_{idx+1} vs placed a_1..a_{idx+1}: edge iff i < idx+1
                self.a
                    .iter()
                    .enumerate()
                    .all(|(i, &ai)| self.g.has_edge(ai, v) == (i < idx))
            };
            if !ok {
                continue;
            }
            if placing_a {
                self.a.push(v);
            } else {
                self.b.push(v);
            }
            self.used.insert(v);
            if self.place(slot + 1)? {
                return Ok(true);
            }
            self.used.remove(v);
            if placing_a {
                self.a.pop();
            } else {
                self.b.pop();
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(Graph::build(3, &[(0, 3)]), Err(Error::VertexOutOfRange(3, 3)));
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn build_is_symmetric_and_dedups() {
        let g = Graph::build(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_subgraph_keeps_ids() {
        let g = Family::Path { n: 5 }.generate().unwrap();
        let w: VertexSet = [1, 2, 4].into_iter().collect();
        let h = g.induced_subgraph(&w).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.edges(), vec![(1, 2)]);
        assert!(h.neighbors(0).is_err());
        assert!(h.induced_subgraph(&VertexSet::singleton(0)).is_err());
        // nested restriction composes
        let w2: VertexSet = [2, 4].into_iter().collect();
        assert_eq!(h.induced_subgraph(&w2).unwrap(), g.induced_subgraph(&w2).unwrap());
    }

    #[test]
    fn ball_on_path() {
        let g = Family::Path { n: 5 }.generate().unwrap();
        assert_eq!(g.ball(2, 2).unwrap(), VertexSet::full(5));
        assert_eq!(g.ball(0, 1).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(g.ball(2, 0).unwrap().to_vec(), vec![2]);
    }

    #[test]
    fn distance_on_cycle() {
        let g = Family::Cycle { n: 6 }.generate().unwrap();
        assert_eq!(g.distance(0, 3).unwrap(), Some(3));
        assert_eq!(g.distance(0, 5).unwrap(), Some(1));
        assert_eq!(g.distance(2, 2).unwrap(), Some(0));
    }

    #[test]
    fn distance_disconnected() {
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.distance(0, 3).unwrap(), None);
        assert_eq!(g.distance_bounded(0, 1, 0), None);
    }

    #[test]
    fn grid_2x2_is_a_4_cycle() {
        let g = Family::Grid { rows: 2, cols: 2 }.generate().unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 4);
        assert!(g.live.iter().all(|v| g.degree(v).unwrap() == 2));
    }

    #[test]
    fn half_graph_edges() {
        let g = Family::HalfGraph { k: 2 }.generate().unwrap();
        assert_eq!(g.edges(), vec![(0, 3)]);
        let g3 = Family::HalfGraph { k: 3 }.generate().unwrap();
        assert_eq!(g3.edges(), vec![(0, 4), (0, 5), (1, 5)]);
    }

    #[test]
    fn subdivided_clique_counts() {
        let g = Family::SubdividedClique { n: 3, r: 1 }.generate().unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.size(), 6);
        // r = 0 is the clique itself
        let k4 = Family::SubdividedClique { n: 4, r: 0 }.generate().unwrap();
        assert_eq!(k4, Family::Clique { n: 4 }.generate().unwrap());
        // endpoints of a subdivided edge sit at distance r+1
        let g2 = Family::SubdividedClique { n: 4, r: 2 }.generate().unwrap();
        assert_eq!(g2.distance(0, 1).unwrap(), Some(3));
    }

    #[test]
    fn random_families_are_deterministic() {
        for seed in 0..5u64 {
            let a = Family::RandomTree { n: 40, seed }.generate().unwrap();
            let b = Family::RandomTree { n: 40, seed }.generate().unwrap();
            assert_eq!(a, b);
            assert_eq!(a.size(), 39);
            let c = Family::BoundedDegreeRandom { n: 40, degree: 3, seed }.generate().unwrap();
            let d = Family::BoundedDegreeRandom { n: 40, degree: 3, seed }.generate().unwrap();
            assert_eq!(c, d);
            assert!(c.live().iter().all(|v| c.degree(v).unwrap() <= 3));
        }
        let a = Family::RandomTree { n: 40, seed: 1 }.generate().unwrap();
        let b = Family::RandomTree { n: 40, seed: 2 }.generate().unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn family_parsing() {
        assert_eq!(Family::parse("path:12", 0).unwrap(), Family::Path { n: 12 });
        assert_eq!(Family::parse("grid:3x4", 0).unwrap(), Family::Grid { rows: 3, cols: 4 });
        assert_eq!(Family::parse("grid:20", 0).unwrap(), Family::Grid { rows: 4, cols: 4 });
        assert_eq!(
            Family::parse("bounded_degree_random:40x3", 7).unwrap(),
            Family::BoundedDegreeRandom { n: 40, degree: 3, seed: 7 }
        );
        assert!(Family::parse("blob:9", 0).is_err());
        assert!(Family::parse("path", 0).is_err());
    }

    #[test]
    fn text_roundtrip() {
        let g = Family::Grid { rows: 3, cols: 3 }.generate().unwrap();
        let h = Graph::parse_text(&g.to_text()).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn text_parsing_errors_carry_line_numbers() {
        let e = Graph::parse_text("2 1\n0 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = Graph::parse_text("# comment\n3 1\n0 1 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = Graph::parse_text("3 2\n0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
        let ok = Graph::parse_text("3 1  # three vertices\n\n0 1\n").unwrap();
        assert_eq!(ok.size(), 1);
    }

    #[test]
    fn relabel_permutes() {
        let g = Family::Path { n: 3 }.generate().unwrap();
        let h = g.relabel(&[2, 0, 1]).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (0, 2)]);
        assert!(g.relabel(&[0, 0, 1]).is_err());
    }

    #[test]
    fn ladder_trivial_cases() {
        let edgeless = Graph::empty(2);
        assert!(edgeless.ladder_order_at_least(1, None).unwrap());
        assert!(!Graph::empty(1).ladder_order_at_least(1, None).unwrap());
        let k2 = Family::Clique { n: 2 }.generate().unwrap();
        assert!(!k2.ladder_order_at_least(1, None).unwrap());
        let k3 = Family::Clique { n: 3 }.generate().unwrap();
        assert!(!k3.ladder_order_at_least(2, None).unwrap());
        assert!(k3.ladder_order_at_least(0, None).unwrap());
    }

    #[test]
    fn ladder_in_half_graphs() {
        let g = Family::HalfGraph { k: 3 }.generate().unwrap();
        assert!(g.ladder_order_at_least(3, None).unwrap());
        let g5 = Family::HalfGraph { k: 5 }.generate().unwrap();
        assert!(g5.ladder_order_at_least(4, None).unwrap());
    }

    #[test]
    fn ladder_budget() {
        let g = Family::Clique { n: 30 }.generate().unwrap();
        assert_eq!(
            g.ladder_order_at_least(3, Some(10)),
            Err(Error::BudgetExceeded("ladder search node cap"))
        );
    }
}
