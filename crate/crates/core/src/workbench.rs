//! Mutable, orientation-aware view of a decomposition used while paths are
//! being rerouted, trimmed, cut and reconnected.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, LabeledGraph, Path, PathDecomposition, Vertex};
use crate::removal::Fork;

#[derive(Clone, Debug)]
pub(crate) struct Workbench {
    n: usize,
    pub(crate) paths: Vec<Vec<Vertex>>,
    pub(crate) host: BTreeSet<Edge>,
}

impl Workbench {
    pub(crate) fn new(d: &PathDecomposition) -> Workbench {
        Workbench {
            n: d.n(),
            paths: d.paths().iter().map(|p| p.vertices().to_vec()).collect(),
            host: d.host().edges().clone(),
        }
    }

    pub(crate) fn locate(&self, e: Edge) -> Option<(usize, usize)> {
        self.paths.iter().enumerate().find_map(|(i, p)| {
            p.windows(2)
                .position(|w| Edge::new(w[0], w[1]) == e)
                .map(|pos| (i, pos))
        })
    }

    /// Path index if `e` is the first or last edge of some path.
    pub(crate) fn end_owner(&self, e: Edge) -> Option<usize> {
        let (i, pos) = self.locate(e)?;
        (pos == 0 || pos + 2 == self.paths[i].len()).then_some(i)
    }

    /// Removes an end edge from its path; the edge stays in the host.
    pub(crate) fn detach_end(&mut self, e: Edge) -> Result<()> {
        let (i, pos) = self.locate(e).ok_or(Error::EdgeNotCovered(e))?;
        let path = &mut self.paths[i];
        if pos == 0 {
            path.remove(0);
        } else if pos + 2 == path.len() {
            path.pop();
        } else {
            return Err(Error::NotAnEndEdge { index: 0, edge: e });
        }
        if path.len() < 2 {
            self.paths.remove(i);
        }
        Ok(())
    }

    /// Removes an end edge from both its path and the host.
    pub(crate) fn trim(&mut self, e: Edge) -> Result<()> {
        self.detach_end(e)?;
        self.host.remove(&e);
        Ok(())
    }

    /// Deletes an interior edge, splitting its path in two.
    pub(crate) fn cut(&mut self, e: Edge) -> Result<()> {
        let (i, pos) = self.locate(e).ok_or(Error::EdgeNotCovered(e))?;
        if pos == 0 || pos + 2 == self.paths[i].len() {
            return self.trim(e);
        }
        let tail = self.paths[i].split_off(pos + 1);
        self.paths.insert(i + 1, tail);
        self.host.remove(&e);
        Ok(())
    }

    /// Detaches `base`, an end edge of one path, and uses it to join paths
    /// `a` and `b` (in either order) at the endpoints `base` connects.
    pub(crate) fn bridge(&mut self, base: Edge, a: usize, b: usize) -> Result<()> {
        let owner = self
            .end_owner(base)
            .ok_or_else(|| Error::Construction(format!("bridge {base} is not an end edge")))?;
        let ends_at = |i: usize, v: Vertex| {
            let p = &self.paths[i];
            p[0] == v || p[p.len() - 1] == v
        };
        let (x, y) = base.endpoints();
        let (a, b) = if ends_at(a, x) && ends_at(b, y) {
            (a, b)
        } else if ends_at(a, y) && ends_at(b, x) {
            (b, a)
        } else {
            return Err(Error::Construction(format!(
                "bridge {base} does not join the ends of paths {a} and {b}"
            )));
        };
        if a == b || owner == a || owner == b {
            return Err(Error::Construction(format!(
                "bridge {base} would close a cycle"
            )));
        }
        let mut left = self.paths[a].clone();
        let mut right = self.paths[b].clone();
        if left[0] == x {
            left.reverse();
        }
        if right[right.len() - 1] == y {
            right.reverse();
        }
        left.extend(right);

        let owner_path = &mut self.paths[owner];
        if Edge::new(owner_path[0], owner_path[1]) == base {
            owner_path.remove(0);
        } else {
            owner_path.pop();
        }
        let slot = a.min(b);
        let mut rebuilt = Vec::with_capacity(self.paths.len());
        for (i, p) in std::mem::take(&mut self.paths).into_iter().enumerate() {
            if i == slot {
                rebuilt.push(left.clone());
            }
            if i != a && i != b && p.len() >= 2 {
                rebuilt.push(p);
            }
        }
        self.paths = rebuilt;
        Ok(())
    }

    /// Removes a fork's two arms from its path and splices the fork's base
    /// (an end edge of another path) into the gap.
    pub(crate) fn fork_swap(&mut self, fork: &Fork) -> Result<()> {
        let (i, pos_a) = self
            .locate(fork.arms[0])
            .ok_or(Error::EdgeNotCovered(fork.arms[0]))?;
        let (j, pos_b) = self
            .locate(fork.arms[1])
            .ok_or(Error::EdgeNotCovered(fork.arms[1]))?;
        if i != j || pos_a.abs_diff(pos_b) != 1 {
            return Err(Error::Construction(format!(
                "fork arms {} and {} are not consecutive on one path",
                fork.arms[0], fork.arms[1]
            )));
        }
        let owner = self.end_owner(fork.base).ok_or_else(|| {
            Error::Construction(format!("fork base {} is not an end edge", fork.base))
        })?;
        if owner == i {
            return Err(Error::Construction(format!(
                "fork base {} lies on the forked path",
                fork.base
            )));
        }
        // Detach first: once spliced in, the base would also lie on path `i`.
        self.detach_end(fork.base)?;
        let (i, pos_a) = self.locate(fork.arms[0]).expect("arm still present");
        let center_pos = if self.paths[i][pos_a] == fork.center {
            pos_a
        } else {
            pos_a + 1
        };
        self.paths[i].remove(center_pos);
        self.host.remove(&fork.arms[0]);
        self.host.remove(&fork.arms[1]);
        Ok(())
    }

    /// Removes every edge of `pending`, preferring trims of end edges, then
    /// fork swaps, then cuts of interior edges while the path count stays
    /// below `bound`. Ties go to the lexicographically least edge.
    pub(crate) fn drain(
        &mut self,
        pending: &mut BTreeSet<Edge>,
        forks: &[Fork],
        bound: usize,
    ) -> Result<()> {
        while !pending.is_empty() {
            if let Some(e) = pending
                .iter()
                .copied()
                .find(|&e| self.end_owner(e).is_some())
            {
                self.trim(e)?;
                pending.remove(&e);
                continue;
            }
            let ready = forks.iter().find(|f| {
                pending.contains(&f.arms[0])
                    && pending.contains(&f.arms[1])
                    && self.end_owner(f.base).is_some()
                    && self.locate(f.base).map(|(i, _)| i) != self.locate(f.arms[0]).map(|(i, _)| i)
            });
            if let Some(fork) = ready {
                self.fork_swap(fork)?;
                pending.remove(&fork.arms[0]);
                pending.remove(&fork.arms[1]);
                continue;
            }
            if self.paths.len() < bound {
                let e = *pending.iter().next().expect("non-empty");
                self.cut(e)?;
                pending.remove(&e);
                continue;
            }
            let stuck: Vec<String> = pending.iter().map(|e| e.to_string()).collect();
            return Err(Error::Construction(format!(
                "cannot remove {} without exceeding {bound} paths",
                stuck.join(", ")
            )));
        }
        Ok(())
    }

    pub(crate) fn into_decomposition(self) -> Result<PathDecomposition> {
        let host = LabeledGraph::new(self.n, self.host)?;
        let paths = self
            .paths
            .into_iter()
            .map(Path::new)
            .collect::<Result<Vec<_>>>()?;
        Ok(PathDecomposition::new(host, paths))
    }
}
