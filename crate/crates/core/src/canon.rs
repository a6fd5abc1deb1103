//! Canonical forms of multigraphs by partition refinement and an
//! individualization search tree with automorphism pruning.
//!
//! Edge multiplicities enter the refinement through the vertex signatures, so
//! the form separates a digon from `K2`.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::Multigraph;

/// Byte string identifying a multigraph up to isomorphism: the vertex count
/// followed by the upper triangle of the relabelled multiplicity matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Multigraph {
        let n = self.0[0] as usize;
        let mut edges = Vec::new();
        let mut k = 1;
        for u in 0..n {
            for v in u + 1..n {
                for _ in 0..self.0[k] {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Multigraph::new(n, edges).expect("canonical form encodes a valid graph")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

/// Full output of the canonical labelling search.
#[derive(Clone, Debug)]
pub struct Canon {
    pub form: CanonicalForm,
    /// `labeling[v]` is the position of `v` in the canonical ordering.
    pub labeling: Vec<usize>,
    /// Automorphisms discovered during the search (vertex permutations).
    /// They generate a subgroup of the automorphism group that respects the
    /// input colouring.
    pub generators: Vec<Vec<usize>>,
}

impl Canon {
    /// Orbits of the group generated by `generators`, as a representative
    /// (least vertex) per vertex.
    pub fn orbit_representatives(&self) -> Vec<usize> {
        orbits(self.labeling.len(), &self.generators)
    }
}

pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    canonize(g, None).form
}

pub fn is_isomorphic(g: &Multigraph, h: &Multigraph) -> bool {
    g.n() == h.n() && g.m() == h.m() && canonical_form(g) == canonical_form(h)
}

/// Canonical labelling of `g` whose vertices carry colours; isomorphisms
/// must preserve colours. Colour values are ordered, so the same colour
/// numbering must be used for graphs that are compared.
pub fn canonize(g: &Multigraph, colors: Option<&[u32]>) -> Canon {
    let n = g.n();
    let mut mat = vec![0u32; n * n];
    for &(a, b) in g.edges() {
        mat[a * n + b] += 1;
        mat[b * n + a] += 1;
    }
    let mut initial: Vec<Vec<usize>> = Vec::new();
    match colors {
        None => {
            if n > 0 {
                initial.push((0..n).collect());
            }
        }
        Some(c) => {
            assert_eq!(c.len(), n);
            let mut keys: Vec<u32> = c.to_vec();
            keys.sort_unstable();
            keys.dedup();
            for k in keys {
                initial.push((0..n).filter(|&v| c[v] == k).collect());
            }
        }
    }
    let mut search = Search {
        n,
        mat,
        best: None,
        first: None,
        generators: Vec::new(),
    };
    let cells = search.refine(initial);
    let mut path = Vec::new();
    search.descend(cells, &mut path);
    let (cert, labeling) = search.best.take().unwrap_or_default();
    let mut bytes = Vec::with_capacity(cert.len() + 1);
    bytes.push(n as u8);
    bytes.extend(cert);
    if let Some(c) = colors {
        let mut order = vec![0; n];
        for (v, &pos) in labeling.iter().enumerate() {
            order[pos] = v;
        }
        for v in order {
            bytes.extend(c[v].to_le_bytes());
        }
    }
    Canon {
        form: CanonicalForm(bytes),
        labeling,
        generators: search.generators,
    }
}

struct Search {
    n: usize,
    mat: Vec<u32>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    first: Option<(Vec<u8>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl Search {
    /// Equitable refinement: split cells by the multiset of multiplicities
    /// into every cell until stable.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let n = self.n;
        loop {
            let k = cells.len();
            let mut cell_of = vec![0usize; n];
            for (i, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = i;
                }
            }
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(n);
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig = vec![0u32; k];
                        let row = &self.mat[v * n..(v + 1) * n];
                        for (w, &m) in row.iter().enumerate() {
                            if m != 0 {
                                sig[cell_of[w]] += m;
                            }
                        }
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|x| x.1).collect());
                        start = i;
                    }
                }
            }
            if next.len() == k {
                return next;
            }
            cells = next;
        }
    }

    fn certificate(&self, cells: &[Vec<usize>]) -> (Vec<u8>, Vec<usize>) {
        let n = self.n;
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut labeling = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            labeling[v] = i;
        }
        let mut cert = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for i in 0..n {
            for j in i + 1..n {
                cert.push(self.mat[order[i] * n + order[j]].min(255) as u8);
            }
        }
        (cert, labeling)
    }

    fn record_automorphism(&mut self, a: &[usize], b: &[usize]) {
        // Leaves a and b yield the same relabelled graph, so b⁻¹∘a is an
        // automorphism.
        let n = self.n;
        let mut inv_b = vec![0; n];
        for v in 0..n {
            inv_b[b[v]] = v;
        }
        let perm: Vec<usize> = (0..n).map(|v| inv_b[a[v]]).collect();
        if perm.iter().enumerate().any(|(i, &p)| i != p) && !self.generators.contains(&perm) {
            self.generators.push(perm);
        }
    }

    fn descend(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let (cert, lab) = self.certificate(&cells);
            if let Some((fc, fl)) = &self.first {
                if *fc == cert {
                    let fl = fl.clone();
                    self.record_automorphism(&lab, &fl);
                }
            } else {
                self.first = Some((cert.clone(), lab.clone()));
            }
            match &self.best {
                None => self.best = Some((cert, lab)),
                Some((bc, bl)) => match cert.cmp(bc) {
                    Ordering::Greater => self.best = Some((cert, lab)),
                    Ordering::Equal => {
                        let bl = bl.clone();
                        self.record_automorphism(&lab, &bl);
                    }
                    Ordering::Less => {}
                },
            }
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target].clone() {
            if !explored.is_empty() {
                let stab: Vec<Vec<usize>> = self
                    .generators
                    .iter()
                    .filter(|g| path.iter().all(|&p| g[p] == p))
                    .cloned()
                    .collect();
                if !stab.is_empty() {
                    let reps = orbits(self.n, &stab);
                    if explored.iter().any(|&w| reps[w] == reps[v]) {
                        continue;
                    }
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(c.iter().copied().filter(|&w| w != v).collect());
                } else {
                    child.push(c.clone());
                }
            }
            let child = self.refine(child);
            path.push(v);
            self.descend(child, path);
            path.pop();
        }
    }
}

/// Orbit representative (least element) of each point under the group
/// generated by `gens`.
pub fn orbits(n: usize, gens: &[Vec<usize>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for g in gens {
        for v in 0..n {
            let a = find(&mut parent, v);
            let b = find(&mut parent, g[v]);
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}
