use std::collections::VecDeque;

use serde::Serialize;

use super::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    pub degrees: Vec<usize>,
    /// `Some(r)` iff every vertex has degree `r`.
    pub regular: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Diameter {
    Finite(usize),
    /// The graph is disconnected.
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bipartiteness {
    Bipartite { left: Vec<usize>, right: Vec<usize> },
    /// Vertices of an odd cycle, in cycle order.
    OddCycle(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub profile: DegreeProfile,
    pub components: Vec<Vec<usize>>,
    pub bipartiteness: Bipartiteness,
    pub diameter: Diameter,
}

impl StructureReport {
    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartiteness, Bipartiteness::Bipartite { .. })
    }
}

impl Graph {
    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile {
            regular: (min_degree == max_degree).then_some(min_degree),
            min_degree,
            max_degree,
            degrees,
        }
    }

    /// BFS distances from `s`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            let dist = self.distances_from(s);
            let comp: Vec<usize> = (0..self.order()).filter(|&v| dist[v] != usize::MAX).collect();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    pub fn diameter(&self) -> Diameter {
        let mut diam = 0;
        for s in 0..self.order() {
            for d in self.distances_from(s) {
                if d == usize::MAX {
                    return Diameter::Infinite;
                }
                diam = diam.max(d);
            }
        }
        Diameter::Finite(diam)
    }

    pub fn bipartiteness(&self) -> Bipartiteness {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        parent[w] = u;
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return Bipartiteness::OddCycle(odd_cycle(&parent, u, w));
                    }
                }
            }
        }
        let (left, right) = (0..n).partition(|&v| side[v] == 0);
        Bipartiteness::Bipartite { left, right }
    }

    pub fn structure(&self) -> StructureReport {
        StructureReport {
            profile: self.degree_profile(),
            components: self.components(),
            bipartiteness: self.bipartiteness(),
            diameter: self.diameter(),
        }
    }
}

/// Closes the BFS-tree paths from `u` and `w` (same colour, adjacent)
/// at their lowest common ancestor.
fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let to_root = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let (pu, pw) = (to_root(u), to_root(w));
    let mut i = pu.len();
    let mut j = pw.len();
    while i > 0 && j > 0 && pu[i - 1] == pw[j - 1] {
        i -= 1;
        j -= 1;
    }
    // pu[i] == pw[j] is the LCA
    let mut cycle: Vec<usize> = pu[..=i].to_vec();
    cycle.extend(pw[..j].iter().rev());
    cycle
}
