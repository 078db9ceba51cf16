//! Quivers with relations attached to exceptional sequences of invertible
//! sheaves on toric surfaces.
//!
//! Morphism spaces between invertible sheaves on a toric surface are spanned
//! by characters, and composition adds characters.  The quiver of a sequence
//! has an arrow for each character not reachable as a sum through an
//! intermediate sheaf, and its relations equate any two arrow paths with the
//! same character sum; both are computed degree by degree, keeping only
//! relations not already implied by shorter ones.
//!
//! Cyclic sequences unroll over two periods, `E_{k+n} = E_k - K`, and the
//! resulting arrows and relations project onto a quiver on `n` vertices,
//! where loops and "long" arrows are possible.

use crate::cohomology::section_chars;
use crate::error::{Error, Result};
use crate::fans::ToricSurface;
use crate::picard::{canonical_class, DivisorClass};
use crate::sequences::{check_cyclic_strong, check_strongly_exceptional};
use crate::systems::{from_sequence, to_sequence, ToricSystem};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, HashSet};

/// Arrow label: a lattice character for toric quivers, or a plain name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Char(i64, i64),
    Name(String),
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Label::Char(x, y) => write!(f, "({x},{y})"),
            Label::Name(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
    pub label: Label,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
}

/// A commutation relation between two parallel arrow paths, stored as arrow
/// indices in source-to-target order.  Both sides always carry the same
/// character sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

impl Quiver {
    /// Arrow counts as an n x n matrix.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0usize; self.vertices]; self.vertices];
        for a in &self.arrows {
            m[a.src][a.dst] += 1;
        }
        m
    }

    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.src == v)
    }
}

/// `h^0` table of a sequence: entry `(i, j)` is `dim Hom(E_i, E_j)`.
pub fn hom_matrix(
    surface: &ToricSurface,
    sequence: &[DivisorClass],
    verify: bool,
) -> Result<Vec<Vec<usize>>> {
    if verify {
        let system = from_sequence(sequence)?;
        let report = check_strongly_exceptional(surface, &system)?;
        if !report.ok {
            return Err(Error::QuiverInput(format!(
                "sequence is not strongly exceptional: {}",
                report.failures[0]
            )));
        }
    }
    let m = sequence.len();
    let mut out = vec![vec![0usize; m]; m];
    for i in 0..m {
        for j in i..m {
            let diff = &sequence[j] - &sequence[i];
            out[i][j] = section_chars(surface, &diff)?.len();
        }
    }
    Ok(out)
}

/// Characters of `Hom(E_i, E_j)` for all needed pairs, as sorted sets.
fn char_table(
    surface: &ToricSurface,
    classes: &[DivisorClass],
    max_span: usize,
) -> Result<HashMap<(usize, usize), BTreeSet<(i64, i64)>>> {
    let m = classes.len();
    let mut table = HashMap::new();
    for i in 0..m {
        for j in i + 1..m.min(i + max_span + 1) {
            let diff = &classes[j] - &classes[i];
            let chars: BTreeSet<(i64, i64)> = section_chars(surface, &diff)?.into_iter().collect();
            table.insert((i, j), chars);
        }
    }
    Ok(table)
}

/// Arrows between positions: characters of `Hom(E_i, E_j)` that are not
/// sums through any intermediate position.
fn generator_arrows(
    table: &HashMap<(usize, usize), BTreeSet<(i64, i64)>>,
    pairs: &[(usize, usize)],
) -> Vec<(usize, usize, (i64, i64))> {
    let mut arrows = Vec::new();
    for &(i, j) in pairs {
        let all = &table[&(i, j)];
        let mut composite: HashSet<(i64, i64)> = HashSet::new();
        for k in i + 1..j {
            if let (Some(left), Some(right)) = (table.get(&(i, k)), table.get(&(k, j))) {
                for a in left {
                    for b in right {
                        composite.insert((a.0 + b.0, a.1 + b.1));
                    }
                }
            }
        }
        for &c in all {
            if !composite.contains(&c) {
                arrows.push((i, j, c));
            }
        }
    }
    arrows.sort();
    arrows
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let root = self.find(self.0[x]);
            self.0[x] = root;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[rb.max(ra)] = rb.min(ra);
        }
    }
}

/// All arrow paths from `i` to `j` (arrow indices), depth-first in arrow
/// order, so the enumeration is deterministic.
fn paths_between(
    arrows: &[(usize, usize, (i64, i64))],
    i: usize,
    j: usize,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(i, Vec::new())];
    while let Some((at, path)) = stack.pop() {
        if at == j && !path.is_empty() {
            out.push(path);
            continue;
        }
        // Push in reverse so the smallest arrow id is explored first.
        for (id, a) in arrows.iter().enumerate().rev() {
            if a.0 == at && a.1 <= j {
                let mut next = path.clone();
                next.push(id);
                stack.push((a.1, next));
            }
        }
    }
    out.sort();
    out
}

fn char_of_path(arrows: &[(usize, usize, (i64, i64))], path: &[usize]) -> (i64, i64) {
    path.iter().fold((0, 0), |acc, &id| (acc.0 + arrows[id].2 .0, acc.1 + arrows[id].2 .1))
}

/// Replace every contiguous occurrence of `pattern` in `path`.
fn substitutions(path: &[usize], pattern: &[usize], replacement: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if pattern.is_empty() || path.len() < pattern.len() {
        return out;
    }
    for start in 0..=path.len() - pattern.len() {
        if &path[start..start + pattern.len()] == pattern {
            let mut next = path[..start].to_vec();
            next.extend_from_slice(replacement);
            next.extend_from_slice(&path[start + pattern.len()..]);
            out.push(next);
        }
    }
    out
}

/// Minimal relations for the pairs, processed by increasing span: for each
/// character class of parallel paths, paths already identified by earlier
/// relations (substituted into subpaths) are merged, and one new relation is
/// emitted per remaining component.
fn minimal_relations(
    arrows: &[(usize, usize, (i64, i64))],
    pairs: &[(usize, usize)],
) -> Vec<Relation> {
    let mut sorted_pairs = pairs.to_vec();
    sorted_pairs.sort_by_key(|&(i, j)| (j - i, i));
    let mut emitted: Vec<Relation> = Vec::new();
    for (i, j) in sorted_pairs {
        let paths = paths_between(arrows, i, j);
        if paths.len() < 2 {
            continue;
        }
        let index: HashMap<&[usize], usize> =
            paths.iter().enumerate().map(|(k, p)| (p.as_slice(), k)).collect();
        let mut uf = UnionFind::new(paths.len());
        for rel in &emitted {
            for (k, p) in paths.iter().enumerate() {
                for q in substitutions(p, &rel.lhs, &rel.rhs) {
                    if let Some(&k2) = index.get(q.as_slice()) {
                        uf.union(k, k2);
                    }
                }
            }
        }
        let mut by_char: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
        for (k, p) in paths.iter().enumerate() {
            by_char.entry(char_of_path(arrows, p)).or_default().push(k);
        }
        let mut chars: Vec<(i64, i64)> = by_char.keys().copied().collect();
        chars.sort();
        for c in chars {
            let group = &by_char[&c];
            // Component representatives, smallest path first.
            let mut reps: Vec<usize> = Vec::new();
            let mut seen_roots: HashSet<usize> = HashSet::new();
            for &k in group {
                if seen_roots.insert(uf.find(k)) {
                    reps.push(k);
                }
            }
            for &other in reps.iter().skip(1) {
                emitted.push(Relation { lhs: paths[reps[0]].clone(), rhs: paths[other].clone() });
                uf.union(reps[0], other);
            }
        }
    }
    emitted
}

/// Quiver with relations of a strongly exceptional sequence.
pub fn build_quiver(
    surface: &ToricSurface,
    sequence: &[DivisorClass],
    verify: bool,
) -> Result<(Quiver, Vec<Relation>)> {
    if verify {
        let system = from_sequence(sequence)?;
        let report = check_strongly_exceptional(surface, &system)?;
        if !report.ok {
            return Err(Error::QuiverInput(format!(
                "sequence is not strongly exceptional: {}",
                report.failures[0]
            )));
        }
    }
    let m = sequence.len();
    let table = char_table(surface, sequence, m)?;
    let pairs: Vec<(usize, usize)> =
        (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let raw = generator_arrows(&table, &pairs);
    let relations = minimal_relations(&raw, &pairs);
    let quiver = Quiver {
        vertices: m,
        arrows: raw
            .into_iter()
            .map(|(src, dst, c)| Arrow { src, dst, label: Label::Char(c.0, c.1) })
            .collect(),
    };
    Ok((quiver, relations))
}

/// Quiver with relations of a cyclic strongly exceptional system, on `n`
/// vertices.  The sequence is unrolled over two periods starting from the
/// structure sheaf; arrows whose source lies in the first period project
/// onto the cyclic quiver, and relations come along.
pub fn build_cyclic_quiver(
    surface: &ToricSurface,
    system: &ToricSystem,
    verify: bool,
) -> Result<(Quiver, Vec<Relation>)> {
    if verify {
        let report = check_cyclic_strong(surface, system)?;
        if !report.ok {
            return Err(Error::QuiverInput(format!(
                "system is not cyclic strongly exceptional: {}",
                report.failures[0]
            )));
        }
    }
    let n = system.n();
    let start = system.basis.zero();
    let one_period = to_sequence(system, &start)?;
    let minus_k = -&canonical_class(system.basis);
    let mut unrolled = one_period.clone();
    for k in 0..n {
        unrolled.push(&one_period[k] + &minus_k);
    }
    let table = char_table(surface, &unrolled, n)?;
    // Arrows with source in the first period; spans up to a full period.
    let arrow_pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..=i + n).map(move |j| (i, j))).collect();
    let raw = generator_arrows(&table, &arrow_pairs);

    // The unrolled arrow set for path enumeration: the computed arrows plus
    // their shifts by one period, clipped to the unrolled range.
    let mut unrolled_arrows = raw.clone();
    let mut shift_origin: Vec<usize> = (0..raw.len()).collect();
    for (id, &(i, j, c)) in raw.iter().enumerate() {
        if i + n < 2 * n && j + n < 2 * n {
            unrolled_arrows.push((i + n, j + n, c));
            shift_origin.push(id);
        }
    }
    let order: Vec<usize> = {
        let mut idx: Vec<usize> = (0..unrolled_arrows.len()).collect();
        idx.sort_by_key(|&k| unrolled_arrows[k]);
        idx
    };
    let sorted_arrows: Vec<(usize, usize, (i64, i64))> =
        order.iter().map(|&k| unrolled_arrows[k]).collect();
    let sorted_origin: Vec<usize> = order.iter().map(|&k| shift_origin[k]).collect();

    // Relation closure over every pair inside the unrolled window: pairs
    // rooted in the second period are shifted copies of first-period pairs,
    // but their relations must exist for substitution into longer paths.
    // Only relations rooted in the first period survive the projection.
    let top = 2 * n - 1;
    let relation_pairs: Vec<(usize, usize)> =
        (0..top).flat_map(|i| (i + 1..=(i + n).min(top)).map(move |j| (i, j))).collect();
    let unrolled_relations = minimal_relations(&sorted_arrows, &relation_pairs);

    let quiver = Quiver {
        vertices: n,
        arrows: raw
            .iter()
            .map(|&(src, dst, c)| Arrow { src, dst: dst % n, label: Label::Char(c.0, c.1) })
            .collect(),
    };
    let relations = unrolled_relations
        .into_iter()
        .filter(|r| sorted_arrows[r.lhs[0]].0 < n)
        .map(|r| Relation {
            lhs: r.lhs.into_iter().map(|id| sorted_origin[id]).collect(),
            rhs: r.rhs.into_iter().map(|id| sorted_origin[id]).collect(),
        })
        .collect();
    Ok((quiver, relations))
}

/// McKay quiver of a finite abelian subgroup of SL(3) acting with the given
/// character weights: vertices are group elements, and each of the three
/// weights contributes an arrow `g -> g + w`.
pub fn mckay_quiver(orders: &[u64], weights: &[Vec<u64>; 3]) -> Result<Quiver> {
    if orders.is_empty() || orders.iter().any(|&o| o == 0) {
        return Err(Error::QuiverInput("group orders must be positive".into()));
    }
    for w in weights {
        if w.len() != orders.len() {
            return Err(Error::QuiverInput("weight length differs from group rank".into()));
        }
    }
    for c in 0..orders.len() {
        let sum: u64 = weights.iter().map(|w| w[c] % orders[c]).sum();
        if sum % orders[c] != 0 {
            return Err(Error::QuiverInput(
                "weights do not sum to zero; the group would not sit in SL(3)".into(),
            ));
        }
    }
    let total: u64 = orders.iter().product();
    if total > 1 << 16 {
        return Err(Error::QuiverInput(format!("group of order {total} is too large")));
    }
    let total = total as usize;
    let decode = |mut idx: usize| -> Vec<u64> {
        let mut g = vec![0u64; orders.len()];
        for c in (0..orders.len()).rev() {
            g[c] = (idx as u64) % orders[c];
            idx /= orders[c] as usize;
        }
        g
    };
    let encode = |g: &[u64]| -> usize {
        let mut idx = 0usize;
        for c in 0..orders.len() {
            idx = idx * orders[c] as usize + (g[c] % orders[c]) as usize;
        }
        idx
    };
    let mut arrows = Vec::with_capacity(total * 3);
    for v in 0..total {
        let g = decode(v);
        for (k, w) in weights.iter().enumerate() {
            let h: Vec<u64> = g.iter().zip(w).zip(orders).map(|((a, b), o)| (a + b) % o).collect();
            arrows.push(Arrow { src: v, dst: encode(&h), label: Label::Name(format!("w{k}")) });
        }
    }
    Ok(Quiver { vertices: total, arrows })
}

/// Graph isomorphism of multidigraphs by backtracking over degree classes;
/// capped at 12 vertices, which covers every quiver this crate produces.
pub fn quiver_isomorphic(a: &Quiver, b: &Quiver) -> Result<bool> {
    if a.vertices > 12 || b.vertices > 12 {
        return Err(Error::QuiverInput("isomorphism test capped at 12 vertices".into()));
    }
    if a.vertices != b.vertices || a.arrows.len() != b.arrows.len() {
        return Ok(false);
    }
    let n = a.vertices;
    let ma = a.multiplicity_matrix();
    let mb = b.multiplicity_matrix();
    let profile = |m: &Vec<Vec<usize>>, v: usize| -> (Vec<usize>, Vec<usize>, usize) {
        let mut out: Vec<usize> = (0..n).filter(|&w| w != v).map(|w| m[v][w]).collect();
        let mut inn: Vec<usize> = (0..n).filter(|&w| w != v).map(|w| m[w][v]).collect();
        out.sort_unstable();
        inn.sort_unstable();
        (out, inn, m[v][v])
    };
    let pa: Vec<_> = (0..n).map(|v| profile(&ma, v)).collect();
    let pb: Vec<_> = (0..n).map(|v| profile(&mb, v)).collect();
    {
        let mut sa = pa.clone();
        let mut sb = pb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return Ok(false);
        }
    }
    fn extend(
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        n: usize,
        ma: &Vec<Vec<usize>>,
        mb: &Vec<Vec<usize>>,
        pa: &[(Vec<usize>, Vec<usize>, usize)],
        pb: &[(Vec<usize>, Vec<usize>, usize)],
    ) -> bool {
        let v = perm.len();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || pa[v] != pb[w] {
                continue;
            }
            if (0..v).any(|u| ma[u][v] != mb[perm[u]][w] || ma[v][u] != mb[w][perm[u]]) {
                continue;
            }
            if ma[v][v] != mb[w][w] {
                continue;
            }
            perm.push(w);
            used[w] = true;
            if extend(perm, used, n, ma, mb, pa, pb) {
                return true;
            }
            perm.pop();
            used[w] = false;
        }
        false
    }
    let mut perm = Vec::new();
    let mut used = vec![false; n];
    Ok(extend(&mut perm, &mut used, n, &ma, &mb, &pa, &pb))
}

fn topo_order(q: &Quiver) -> Result<Vec<usize>> {
    let mut indeg = vec![0usize; q.vertices];
    for a in &q.arrows {
        indeg[a.dst] += 1;
    }
    let mut queue: Vec<usize> = (0..q.vertices).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::new();
    while let Some(v) = queue.pop() {
        order.push(v);
        for a in &q.arrows {
            if a.src == v {
                indeg[a.dst] -= 1;
                if indeg[a.dst] == 0 {
                    queue.push(a.dst);
                }
            }
        }
    }
    if order.len() != q.vertices {
        return Err(Error::QuiverInput("quiver has directed cycles".into()));
    }
    Ok(order)
}

/// Dimension of the free path algebra: the number of paths, trivial paths
/// included.  Defined for acyclic quivers.
pub fn path_count(q: &Quiver) -> Result<u128> {
    let order = topo_order(q)?;
    // f(v) = paths starting at v, the trivial one included.
    let mut f = vec![0u128; q.vertices];
    for &v in order.iter().rev() {
        let mut total = 1u128;
        for a in &q.arrows {
            if a.src == v {
                total += f[a.dst];
            }
        }
        f[v] = total;
    }
    Ok(f.iter().sum())
}

/// Dimension of the path algebra modulo the character relations: paths with
/// equal character sums are identified, so each ordered pair of vertices
/// contributes its number of distinct path characters.  Requires character
/// labels and an acyclic quiver.
pub fn path_algebra_dim(q: &Quiver) -> Result<u128> {
    let order = topo_order(q)?;
    for a in &q.arrows {
        if !matches!(a.label, Label::Char(_, _)) {
            return Err(Error::QuiverInput("path algebra dimension needs character labels".into()));
        }
    }
    // Per source vertex, distinct path characters into each later vertex.
    let mut dim = q.vertices as u128;
    for &v in &order {
        let mut reach: HashMap<usize, BTreeSet<(i64, i64)>> = HashMap::new();
        reach.insert(v, [(0, 0)].into());
        for &w in &order {
            if w == v {
                continue;
            }
            let mut set: BTreeSet<(i64, i64)> = BTreeSet::new();
            for a in &q.arrows {
                if a.dst != w {
                    continue;
                }
                let Label::Char(x, y) = a.label else { unreachable!() };
                if let Some(prev) = reach.get(&a.src) {
                    for &(px, py) in prev {
                        set.insert((px + x, py + y));
                    }
                }
            }
            if !set.is_empty() {
                dim += set.len() as u128;
                reach.insert(w, set);
            }
        }
    }
    Ok(dim)
}

/// The combinatorial quiver of the plane blown up in `t` distinct points:
/// one arrow into each exceptional vertex, two from each exceptional vertex
/// to the hyperplane vertex, three from there to the final vertex.
pub fn plane_blowup_shape(t: usize) -> Quiver {
    // Vertices: 0 = O, 1..=t = R_i, t+1 = H, t+2 = 2H.
    let mut arrows = Vec::new();
    for i in 1..=t {
        arrows.push(Arrow { src: 0, dst: i, label: Label::Name(format!("e{i}")) });
        for k in 0..2 {
            arrows.push(Arrow { src: i, dst: t + 1, label: Label::Name(format!("f{i}{k}")) });
        }
    }
    for k in 0..3 {
        arrows.push(Arrow { src: t + 1, dst: t + 2, label: Label::Name(format!("g{k}")) });
    }
    Quiver { vertices: t + 3, arrows }
}

/// DOT rendering; relations go in as comments since DOT has no syntax for
/// them.
pub fn to_dot(q: &Quiver, relations: &[Relation]) -> String {
    use std::fmt::Write as _;
    let mut s = String::from("digraph quiver {\n");
    for v in 0..q.vertices {
        let _ = writeln!(s, "  v{v} [label=\"{v}\"];");
    }
    for a in &q.arrows {
        let _ = writeln!(s, "  v{} -> v{} [label=\"{}\"];", a.src, a.dst, a.label);
    }
    for r in relations {
        let _ = writeln!(s, "  // relation: {:?} = {:?}", r.lhs, r.rhs);
    }
    s.push_str("}\n");
    s
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

pub fn to_json(q: &Quiver, relations: &[Relation]) -> QuiverJson {
    QuiverJson { vertices: q.vertices, arrows: q.arrows.clone(), relations: relations.to_vec() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::augment::{base_system, BaseKind};
    use crate::fans::{base_fa, base_p2};
    use crate::picard::SurfaceBasis;
    use crate::systems::to_sequence;

    fn plane_sequence(top: i64) -> (ToricSurface, Vec<DivisorClass>) {
        let p2 = base_p2();
        let b = p2.basis().unwrap();
        let seq: Vec<DivisorClass> =
            (0..=top).map(|k| DivisorClass::from_i64(b, &[k]).unwrap()).collect();
        (p2, seq)
    }

    #[test]
    fn plane_hom_matrix() {
        let (p2, seq) = plane_sequence(2);
        let m = hom_matrix(&p2, &seq, true).unwrap();
        assert_eq!(m, vec![vec![1, 3, 6], vec![0, 1, 3], vec![0, 0, 1]]);
    }

    #[test]
    fn plane_beilinson_quiver() {
        let (p2, seq) = plane_sequence(2);
        let (q, rels) = build_quiver(&p2, &seq, true).unwrap();
        assert_eq!(q.multiplicity_matrix(), vec![vec![0, 3, 0], vec![0, 0, 3], vec![0, 0, 0]]);
        // b_i a_j = b_j a_i for i < j: three relations.
        assert_eq!(rels.len(), 3);
        for r in &rels {
            assert_eq!(r.lhs.len(), 2);
            assert_eq!(r.rhs.len(), 2);
        }
    }

    #[test]
    fn plane_path_algebra_dimensions() {
        let (p2, seq) = plane_sequence(2);
        let (q, _) = build_quiver(&p2, &seq, false).unwrap();
        // Free paths: 3 trivial + 3 + 3 + 9 composites.
        assert_eq!(path_count(&q).unwrap(), 18);
        // Modulo relations: 3 + 3 + 3 + 6 distinct characters.
        assert_eq!(path_algebra_dim(&q).unwrap(), 15);
    }

    fn assert_relations_parallel(q: &Quiver, rels: &[Relation]) {
        let char_of = |path: &[usize]| -> ((usize, usize), (i64, i64)) {
            let mut sum = (0i64, 0i64);
            for win in path.windows(2) {
                assert_eq!(q.arrows[win[0]].dst % q.vertices, q.arrows[win[1]].src);
            }
            for &id in path {
                let Label::Char(x, y) = q.arrows[id].label else { panic!("named label") };
                sum = (sum.0 + x, sum.1 + y);
            }
            ((q.arrows[path[0]].src, q.arrows[*path.last().unwrap()].dst), sum)
        };
        for r in rels {
            assert_eq!(char_of(&r.lhs), char_of(&r.rhs));
        }
    }

    #[test]
    fn hirzebruch_quiver_arrows() {
        // F_2 with the s = 0 system: partial sums O, P, P+Q, 2P+Q.
        let f2 = base_fa(2).unwrap();
        let sys = base_system(BaseKind::Fa(2), 0).unwrap();
        let seq = to_sequence(&sys, &sys.basis.zero()).unwrap();
        let (q, rels) = build_quiver(&f2, &seq, true).unwrap();
        let m = q.multiplicity_matrix();
        assert_eq!(m[0][1], 2);
        assert_eq!(m[1][2], 4);
        assert_eq!(m[2][3], 2);
        assert_eq!(m[0][2], 0);
        // Two commutation squares per short pair plus one cube relation
        // through the character that only factors one way.
        assert_eq!(rels.len(), 5);
        assert_relations_parallel(&q, &rels);
        // Algebra dimension equals the sum of all hom spaces.
        let homs = hom_matrix(&f2, &seq, false).unwrap();
        let total: usize = homs.iter().flatten().sum();
        assert_eq!(path_algebra_dim(&q).unwrap(), total as u128);
    }

    #[test]
    fn cyclic_quiver_of_plane() {
        let p2 = base_p2();
        let sys = base_system(BaseKind::P2, 0).unwrap();
        let (q, rels) = build_cyclic_quiver(&p2, &sys, true).unwrap();
        assert_eq!(q.vertices, 3);
        let m = q.multiplicity_matrix();
        assert_eq!(m[0][1], 3);
        assert_eq!(m[1][2], 3);
        assert_eq!(m[2][0], 3);
        assert_eq!(q.arrows.len(), 9);
        // Three commutation relations behind each of the three vertices.
        assert_eq!(rels.len(), 9);
        assert_relations_parallel(&q, &rels);
    }

    #[test]
    fn mckay_z3_matches_plane_cyclic_quiver() {
        let p2 = base_p2();
        let sys = base_system(BaseKind::P2, 0).unwrap();
        let (q, _) = build_cyclic_quiver(&p2, &sys, false).unwrap();
        let mckay = mckay_quiver(&[3], &[vec![1], vec![1], vec![1]]).unwrap();
        assert!(quiver_isomorphic(&q, &mckay).unwrap());
    }

    #[test]
    fn mckay_rejects_non_sl3_weights() {
        assert!(mckay_quiver(&[3], &[vec![1], vec![1], vec![2]]).is_err());
    }

    #[test]
    fn isomorphism_distinguishes() {
        let a = mckay_quiver(&[4], &[vec![1], vec![1], vec![2]]).unwrap();
        let b = mckay_quiver(&[4], &[vec![1], vec![3], vec![0]]).unwrap();
        assert!(quiver_isomorphic(&a, &a.clone()).unwrap());
        assert!(!quiver_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn shape_path_counts() {
        for t in 1..=5usize {
            let q = plane_blowup_shape(t);
            assert_eq!(path_count(&q).unwrap(), (18 * t + 6) as u128);
        }
    }
}
