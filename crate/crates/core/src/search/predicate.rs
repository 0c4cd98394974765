use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::invariants::{is_bipartite, is_k_colorable, is_triangle_free, odd_cycle_transversal};

/// One conjunct of a search predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "atom", content = "k")]
pub enum Atom {
    TriangleFree,
    NonBipartite,
    ChiAtLeast(usize),
    D2AtLeast(usize),
    Connected,
}

impl Atom {
    /// Cheap atoms first so expensive solvers only see survivors.
    fn cost(self) -> u8 {
        match self {
            Atom::TriangleFree => 0,
            Atom::Connected => 1,
            Atom::NonBipartite => 2,
            Atom::ChiAtLeast(_) => 3,
            Atom::D2AtLeast(_) => 4,
        }
    }

    pub fn holds(self, g: &Graph) -> Result<bool> {
        Ok(match self {
            Atom::TriangleFree => is_triangle_free(g),
            Atom::NonBipartite => !is_bipartite(g).is_bipartite(),
            Atom::Connected => is_connected(g),
            Atom::ChiAtLeast(k) => k == 0 || is_k_colorable(g, k - 1)?.is_none(),
            Atom::D2AtLeast(k) => odd_cycle_transversal(g)?.d2 >= k,
        })
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::TriangleFree => f.write_str("triangle-free"),
            Atom::NonBipartite => f.write_str("non-bipartite"),
            Atom::Connected => f.write_str("connected"),
            Atom::ChiAtLeast(k) => write!(f, "chi>={k}"),
            Atom::D2AtLeast(k) => write!(f, "d2>={k}"),
        }
    }
}

impl FromStr for Atom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace('_', "-");
        let threshold = |rest: &str| {
            rest.trim()
                .parse::<usize>()
                .map_err(|_| domain(format!("bad threshold in predicate atom `{s}`")))
        };
        match t.as_str() {
            "triangle-free" | "tf" | "k3-free" => Ok(Atom::TriangleFree),
            "non-bipartite" | "nonbipartite" | "nonbip" => Ok(Atom::NonBipartite),
            "connected" => Ok(Atom::Connected),
            _ => {
                if let Some(rest) = t.strip_prefix("chi>=") {
                    Ok(Atom::ChiAtLeast(threshold(rest)?))
                } else if let Some(rest) = t.strip_prefix("d2>=") {
                    Ok(Atom::D2AtLeast(threshold(rest)?))
                } else {
                    Err(domain(format!("unknown predicate atom `{s}`")))
                }
            }
        }
    }
}

/// Conjunction of atoms; triangle-freeness is always present.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Predicate {
    atoms: Vec<Atom>,
}

impl Predicate {
    pub fn triangle_free() -> Self {
        Predicate {
            atoms: vec![Atom::TriangleFree],
        }
    }

    pub fn new(atoms: impl IntoIterator<Item = Atom>) -> Self {
        let mut all: Vec<Atom> = atoms.into_iter().collect();
        all.push(Atom::TriangleFree);
        all.sort_by_key(|a| (a.cost(), a.to_string()));
        all.dedup();
        Predicate { atoms: all }
    }

    pub fn with(mut self, atom: Atom) -> Self {
        self.atoms.push(atom);
        Predicate::new(self.atoms)
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Evaluates every atom. Triangle-freeness is re-checked so the predicate can be used on
    /// arbitrary graphs.
    pub fn holds(&self, g: &Graph) -> Result<bool> {
        self.holds_skipping(g, false)
    }

    /// Evaluation on graphs already known to be triangle-free.
    pub(crate) fn holds_on_triangle_free(&self, g: &Graph) -> Result<bool> {
        self.holds_skipping(g, true)
    }

    fn holds_skipping(&self, g: &Graph, skip_tf: bool) -> Result<bool> {
        for &a in &self.atoms {
            if skip_tf && a == Atom::TriangleFree {
                continue;
            }
            if !a.holds(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Default for Predicate {
    fn default() -> Self {
        Predicate::triangle_free()
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.atoms.iter().map(|a| a.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Predicate {
    type Err = Error;

    /// Atoms separated by `,`, `&` or `+`, e.g. `non-bipartite,chi>=4`.
    fn from_str(s: &str) -> Result<Self> {
        let atoms = s
            .split([',', '&', '+'])
            .filter(|p| !p.trim().is_empty())
            .map(Atom::from_str)
            .collect::<Result<Vec<_>>>()?;
        Ok(Predicate::new(atoms))
    }
}

impl Serialize for Predicate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Predicate {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub(crate) fn is_connected(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, grotzsch, path};

    #[test]
    fn parse_and_display_round_trip() {
        let p: Predicate = "chi>=4, non-bipartite".parse().unwrap();
        assert_eq!(p.to_string(), "triangle-free,non-bipartite,chi>=4");
        assert_eq!(p.to_string().parse::<Predicate>().unwrap(), p);
        assert!("chi>=x".parse::<Predicate>().is_err());
        assert!("planar".parse::<Predicate>().is_err());
        assert_eq!("".parse::<Predicate>().unwrap(), Predicate::triangle_free());
    }

    #[test]
    fn atoms_on_known_graphs() {
        let g = grotzsch();
        let p: Predicate = "chi>=4,connected,non-bipartite".parse().unwrap();
        assert!(p.holds(&g).unwrap());
        let c5 = cycle(5).unwrap();
        assert!(!p.holds(&c5).unwrap());
        assert!("non-bipartite,d2>=1"
            .parse::<Predicate>()
            .unwrap()
            .holds(&c5)
            .unwrap());
        assert!(!"non-bipartite"
            .parse::<Predicate>()
            .unwrap()
            .holds(&path(4))
            .unwrap());
        assert!(!is_connected(&Graph::empty(2)));
    }
}
