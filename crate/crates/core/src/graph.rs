//! Undirected simple graphs with role-tagged vertices.
//!
//! Vertex indices follow a fixed layout for the path-derived families:
//! `x_1..x_p` occupy `0..p`, `y_1..y_p` occupy `p..2p`, and the Mycielski
//! apex `a` is last. Display names carry the 1-based position `t`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Index of a vertex inside a [`Graph`].
pub type VertexId = usize;

/// Unordered edge stored with `0 < 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub VertexId, pub VertexId);

impl Edge {
    pub fn new(u: VertexId, v: VertexId) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn other(&self, v: VertexId) -> VertexId {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    X(usize),
    Y(usize),
    Apex,
    /// Vertex of a graph that is not one of the built-in families.
    Plain(String),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::X(t) => write!(f, "x{t}"),
            Role::Y(t) => write!(f, "y{t}"),
            Role::Apex => f.write_str("a"),
            Role::Plain(name) => f.write_str(name),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Path,
    Shadow,
    Splitting,
    Mycielski,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Path, Family::Shadow, Family::Splitting, Family::Mycielski];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Shadow => "shadow",
            Family::Splitting => "splitting",
            Family::Mycielski => "mycielski",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn build(self, p: usize) -> Result<Graph> {
        match self {
            Family::Path => path_graph(p),
            Family::Shadow => shadow_of_path(p),
            Family::Splitting => splitting_of_path(p),
            Family::Mycielski => mycielski_of_path(p),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The three families that carry a sharing scheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SchemeFamily {
    Shadow,
    Splitting,
    Mycielski,
}

impl SchemeFamily {
    pub const ALL: [SchemeFamily; 3] = [SchemeFamily::Shadow, SchemeFamily::Splitting, SchemeFamily::Mycielski];

    pub fn family(self) -> Family {
        match self {
            SchemeFamily::Shadow => Family::Shadow,
            SchemeFamily::Splitting => Family::Splitting,
            SchemeFamily::Mycielski => Family::Mycielski,
        }
    }

    pub fn name(self) -> &'static str {
        self.family().name()
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Participant count `n` for parameter `p`.
    pub fn participants(self, p: usize) -> usize {
        match self {
            SchemeFamily::Mycielski => 2 * p + 1,
            _ => 2 * p,
        }
    }
}

impl TryFrom<Family> for SchemeFamily {
    type Error = Error;

    fn try_from(f: Family) -> Result<Self> {
        match f {
            Family::Shadow => Ok(SchemeFamily::Shadow),
            Family::Splitting => Ok(SchemeFamily::Splitting),
            Family::Mycielski => Ok(SchemeFamily::Mycielski),
            Family::Path => Err(Error::InvalidParameter("the path family carries no sharing scheme".into())),
        }
    }
}

impl fmt::Display for SchemeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Immutable undirected simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    family: Option<Family>,
    p: usize,
    roles: Vec<Role>,
    edges: Vec<Edge>,
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph from explicit roles and edges, rejecting self-loops,
    /// duplicate edges, out-of-range endpoints and duplicate display names.
    pub fn new(family: Option<Family>, p: usize, roles: Vec<Role>, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let n = roles.len();
        let mut names = BTreeSet::new();
        for r in &roles {
            if !names.insert(format!("{r}")) {
                return Err(Error::InvalidGraph(format!("duplicate vertex name {r}")));
            }
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            if !set.insert(Edge::new(u, v)) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
        }
        let edges: Vec<Edge> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { family, p, roles, edges, adj })
    }

    /// Graph with plain named vertices, e.g. a fixture topology.
    pub fn from_named(names: impl IntoIterator<Item = String>, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let roles = names.into_iter().map(Role::Plain).collect();
        Self::new(None, 0, roles, edges)
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    /// The path length the family was built from (0 for plain graphs).
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn n(&self) -> usize {
        self.roles.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn role(&self, v: VertexId) -> &Role {
        &self.roles[v]
    }

    pub fn name(&self, v: VertexId) -> String {
        format!("{}", self.roles[v])
    }

    pub fn find(&self, name: &str) -> Option<VertexId> {
        (0..self.n()).find(|&v| self.name(v) == name)
    }

    /// Neighbours in ascending order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of an edge in [`Graph::edges`].
    pub fn edge_index(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.edges.binary_search(&Edge::new(u, v)).ok()
    }

    /// `(δ, Δ)`.
    pub fn degree_stats(&self) -> (usize, usize) {
        let degs = self.adj.iter().map(Vec::len);
        let min = degs.clone().min().unwrap_or(0);
        let max = degs.max().unwrap_or(0);
        (min, max)
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn distances_from(&self, src: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Longest shortest-path distance, or `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.distances_from(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Shortest path from any vertex of `sources` to `target`, smallest
    /// source and neighbour indices first.
    pub fn shortest_path_from_set(&self, sources: &BTreeSet<VertexId>, target: VertexId) -> Option<Vec<VertexId>> {
        let mut parent: Vec<Option<VertexId>> = vec![None; self.n()];
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::new();
        for &s in sources {
            seen[s] = true;
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            if u == target {
                let mut path = vec![u];
                let mut cur = u;
                while let Some(prev) = parent[cur] {
                    path.push(prev);
                    cur = prev;
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Vertices carrying role `X(t)`, in order of `t`.
    pub fn x(&self, t: usize) -> VertexId {
        debug_assert!(t >= 1 && t <= self.p);
        t - 1
    }

    pub fn y(&self, t: usize) -> VertexId {
        debug_assert!(t >= 1 && t <= self.p && self.family != Some(Family::Path));
        self.p + t - 1
    }

    pub fn apex(&self) -> Option<VertexId> {
        (self.family == Some(Family::Mycielski)).then(|| 2 * self.p)
    }
}

/// Which printed weight family an edge of a path-derived graph belongs to.
/// `t` is the smaller path position of the edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    /// `x_t x_{t+1}`
    XX(usize),
    /// `y_t y_{t+1}`
    YY(usize),
    /// `x_t y_{t+1}`
    XY(usize),
    /// `y_t x_{t+1}`
    YX(usize),
    /// `a y_t`
    ApexY(usize),
    Other,
}

impl Graph {
    pub fn edge_kind(&self, e: Edge) -> EdgeKind {
        let (a, b) = (&self.roles[e.0], &self.roles[e.1]);
        match (a, b) {
            (Role::X(s), Role::X(t)) if t == &(s + 1) => EdgeKind::XX(*s),
            (Role::X(s), Role::X(t)) if s == &(t + 1) => EdgeKind::XX(*t),
            (Role::Y(s), Role::Y(t)) if t == &(s + 1) => EdgeKind::YY(*s),
            (Role::Y(s), Role::Y(t)) if s == &(t + 1) => EdgeKind::YY(*t),
            (Role::X(s), Role::Y(t)) | (Role::Y(t), Role::X(s)) if *t == s + 1 => EdgeKind::XY(*s),
            (Role::X(s), Role::Y(t)) | (Role::Y(t), Role::X(s)) if *s == t + 1 => EdgeKind::YX(*t),
            (Role::Apex, Role::Y(t)) | (Role::Y(t), Role::Apex) => EdgeKind::ApexY(*t),
            _ => EdgeKind::Other,
        }
    }
}

fn check_p(p: usize) -> Result<()> {
    if p < 2 {
        Err(Error::InvalidParameter(format!("p must be at least 2, got {p}")))
    } else {
        Ok(())
    }
}

fn xy_roles(p: usize, with_y: bool) -> Vec<Role> {
    let mut roles: Vec<Role> = (1..=p).map(Role::X).collect();
    if with_y {
        roles.extend((1..=p).map(Role::Y));
    }
    roles
}

/// `P_p`: `x_1 - x_2 - ... - x_p`.
pub fn path_graph(p: usize) -> Result<Graph> {
    check_p(p)?;
    let edges = (0..p - 1).map(|i| (i, i + 1));
    Graph::new(Some(Family::Path), p, xy_roles(p, false), edges)
}

/// Shadow graph `D2(P_p)`: two copies of the path, each vertex also joined
/// to the neighbours of its twin.
pub fn shadow_of_path(p: usize) -> Result<Graph> {
    check_p(p)?;
    let (x, y) = (|t: usize| t - 1, |t: usize| p + t - 1);
    let mut edges = Vec::with_capacity(4 * (p - 1));
    for t in 1..p {
        edges.push((x(t), x(t + 1)));
        edges.push((y(t), y(t + 1)));
        edges.push((x(t), y(t + 1)));
        edges.push((y(t), x(t + 1)));
    }
    Graph::new(Some(Family::Shadow), p, xy_roles(p, true), edges)
}

/// Splitting graph: the path plus a copy `y_t` adjacent to the neighbours of `x_t`.
pub fn splitting_of_path(p: usize) -> Result<Graph> {
    check_p(p)?;
    let (x, y) = (|t: usize| t - 1, |t: usize| p + t - 1);
    let mut edges = Vec::with_capacity(3 * (p - 1));
    for t in 1..p {
        edges.push((x(t), x(t + 1)));
        edges.push((x(t), y(t + 1)));
        edges.push((y(t), x(t + 1)));
    }
    Graph::new(Some(Family::Splitting), p, xy_roles(p, true), edges)
}

/// Mycielski graph: the splitting graph plus an apex adjacent to every copy.
pub fn mycielski_of_path(p: usize) -> Result<Graph> {
    check_p(p)?;
    let (x, y) = (|t: usize| t - 1, |t: usize| p + t - 1);
    let apex = 2 * p;
    let mut edges = Vec::with_capacity(4 * p - 3);
    for t in 1..p {
        edges.push((x(t), x(t + 1)));
        edges.push((x(t), y(t + 1)));
        edges.push((y(t), x(t + 1)));
    }
    edges.extend((1..=p).map(|t| (apex, y(t))));
    let mut roles = xy_roles(p, true);
    roles.push(Role::Apex);
    Graph::new(Some(Family::Mycielski), p, roles, edges)
}
