//! Normal-form arithmetic in products of dihedral groups of order 8 with an
//! elementary abelian tail, and Cayley-graph construction over them.
//!
//! The group is `H_1 x ... x H_k x Z_2^l` where each `H_i` is
//! `<a, b | a^4 = b^2 = 1, b^-1 a b = a^-1>`. Elements are stored in the
//! normal form `a^x b^y` per dihedral factor, so the product rule per factor
//! is `(x1,y1)*(x2,y2) = (x1 + (-1)^y1 * x2 mod 4, y1 + y2 mod 2)` and no
//! symbolic rewriting is ever needed.
//!
//! Edges of a Cayley graph use left multiplication `s*g`, exactly as in the
//! defining edge set `{{g, sg}}`; coset matching uses right multiplication
//! `u*b`. Both conventions are locked by unit tests.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{CompactGraph, GraphBuilder, MAX_ORDER};

/// Number of dihedral factors `k` and cyclic factors `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupShape {
    pub dihedral: usize,
    pub cyclic: usize,
}

impl GroupShape {
    pub fn new(dihedral: usize, cyclic: usize) -> Self {
        GroupShape { dihedral, cyclic }
    }

    /// Group order `8^k * 2^l`.
    pub fn order(&self) -> usize {
        (1usize << (3 * self.dihedral)) << self.cyclic
    }

    /// Valency of the standard Cayley graph, `3k + l`.
    pub fn dimension(&self) -> usize {
        3 * self.dihedral + self.cyclic
    }

    pub fn identity(&self) -> DihedralProductElement {
        DihedralProductElement {
            dihedral: vec![(0, 0); self.dihedral],
            cyclic: vec![0; self.cyclic],
        }
    }
}

/// Element in normal form: per dihedral factor the pair `(x, y)` encoding
/// `a^x b^y` with `x` mod 4 and `y` mod 2, then one bit per cyclic factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DihedralProductElement {
    dihedral: Vec<(u8, u8)>,
    cyclic: Vec<u8>,
}

impl DihedralProductElement {
    pub fn shape(&self) -> GroupShape {
        GroupShape::new(self.dihedral.len(), self.cyclic.len())
    }

    pub fn is_identity(&self) -> bool {
        self.dihedral.iter().all(|&(x, y)| x == 0 && y == 0) && self.cyclic.iter().all(|&z| z == 0)
    }

    /// Normal-form exponents of the i-th dihedral factor.
    pub fn dihedral_part(&self, i: usize) -> (u8, u8) {
        self.dihedral[i]
    }

    pub fn cyclic_bit(&self, j: usize) -> u8 {
        self.cyclic[j]
    }

    pub(crate) fn from_parts(dihedral: Vec<(u8, u8)>, cyclic: Vec<u8>) -> Self {
        debug_assert!(dihedral.iter().all(|&(x, y)| x < 4 && y < 2));
        debug_assert!(cyclic.iter().all(|&z| z < 2));
        DihedralProductElement { dihedral, cyclic }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.dihedral.len() != other.dihedral.len() || self.cyclic.len() != other.cyclic.len() {
            return Err(Error::invalid(format!(
                "group shape mismatch: ({},{}) vs ({},{})",
                self.dihedral.len(),
                self.cyclic.len(),
                other.dihedral.len(),
                other.cyclic.len()
            )));
        }
        Ok(())
    }

    /// Componentwise product, left factor first.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let dihedral = self
            .dihedral
            .iter()
            .zip(&other.dihedral)
            .map(|(&(x1, y1), &(x2, y2))| {
                let x = if y1 == 0 { x1 + x2 } else { x1 + 4 - x2 } % 4;
                (x, (y1 + y2) % 2)
            })
            .collect();
        let cyclic = self
            .cyclic
            .iter()
            .zip(&other.cyclic)
            .map(|(&z1, &z2)| (z1 + z2) % 2)
            .collect();
        Ok(DihedralProductElement { dihedral, cyclic })
    }

    pub fn inverse(&self) -> Self {
        let dihedral = self
            .dihedral
            .iter()
            // Reflections (y = 1) are involutions; rotations invert a^x to a^-x.
            .map(|&(x, y)| if y == 0 { ((4 - x) % 4, 0) } else { (x, y) })
            .collect();
        DihedralProductElement {
            dihedral,
            cyclic: self.cyclic.clone(),
        }
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity()
            && self
                .multiply(self)
                .map(|sq| sq.is_identity())
                .unwrap_or(false)
    }

    /// Mixed-radix index: dihedral factor i contributes digits `(x_i, y_i)`
    /// in bases (4, 2) with factor 1 least significant, followed by the
    /// cyclic bits. The identity is index 0.
    pub fn index(&self) -> usize {
        let mut idx = 0usize;
        for &(x, y) in self.dihedral.iter().rev() {
            idx = idx * 8 + (y as usize) * 4 + x as usize;
        }
        for &z in self.cyclic.iter().rev() {
            idx = idx * 2 + z as usize;
        }
        idx
    }

    pub fn from_index(shape: GroupShape, mut idx: usize) -> Self {
        let mut cyclic = vec![0u8; shape.cyclic];
        for z in cyclic.iter_mut() {
            *z = (idx % 2) as u8;
            idx /= 2;
        }
        let mut dihedral = vec![(0u8, 0u8); shape.dihedral];
        for part in dihedral.iter_mut() {
            *part = ((idx % 4) as u8, (idx / 4 % 2) as u8);
            idx /= 8;
        }
        DihedralProductElement { dihedral, cyclic }
    }

    /// Printable normal form, e.g. `a1^3b1c2`; the identity prints `e`.
    pub fn name(&self) -> String {
        let mut out = String::new();
        for (i, &(x, y)) in self.dihedral.iter().enumerate() {
            match x {
                0 => {}
                1 => out.push_str(&format!("a{}", i + 1)),
                _ => out.push_str(&format!("a{}^{}", i + 1, x)),
            }
            if y == 1 {
                out.push_str(&format!("b{}", i + 1));
            }
        }
        for (j, &z) in self.cyclic.iter().enumerate() {
            if z == 1 {
                out.push_str(&format!("c{}", j + 1));
            }
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }

    fn single_dihedral(shape: GroupShape, factor: usize, x: u8, y: u8) -> Self {
        let mut e = shape.identity();
        e.dihedral[factor] = (x, y);
        e
    }

    fn single_cyclic(shape: GroupShape, factor: usize) -> Self {
        let mut e = shape.identity();
        e.cyclic[factor] = 1;
        e
    }
}

/// The standard involution set: per dihedral factor `a_i^2, b_i, a_i b_i`,
/// then the cyclic generators `c_1..c_l`, in that fixed order.
#[derive(Clone, Debug)]
pub struct GeneratingSet {
    shape: GroupShape,
    elements: Vec<DihedralProductElement>,
    names: Vec<String>,
}

impl GeneratingSet {
    pub fn shape(&self) -> GroupShape {
        self.shape
    }

    pub fn elements(&self) -> &[DihedralProductElement] {
        &self.elements
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Generating set with the named generator removed.
    pub fn without(&self, index: usize) -> GeneratingSet {
        let mut out = self.clone();
        out.elements.remove(index);
        out.names.remove(index);
        out
    }

    /// Position of the generator called `name`, if present.
    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Builds the standard generating set of `3k + l` involutions.
pub fn generating_set(dihedral: usize, cyclic: usize) -> Result<GeneratingSet> {
    if dihedral == 0 && cyclic == 0 {
        return Err(Error::invalid("generating set needs at least one factor"));
    }
    let shape = GroupShape::new(dihedral, cyclic);
    let mut elements = Vec::with_capacity(shape.dimension());
    let mut names = Vec::with_capacity(shape.dimension());
    for i in 0..dihedral {
        elements.push(DihedralProductElement::single_dihedral(shape, i, 2, 0));
        names.push(format!("a{}^2", i + 1));
        elements.push(DihedralProductElement::single_dihedral(shape, i, 0, 1));
        names.push(format!("b{}", i + 1));
        elements.push(DihedralProductElement::single_dihedral(shape, i, 1, 1));
        names.push(format!("a{}b{}", i + 1, i + 1));
    }
    for j in 0..cyclic {
        elements.push(DihedralProductElement::single_cyclic(shape, j));
        names.push(format!("c{}", j + 1));
    }
    debug_assert!(elements.iter().all(DihedralProductElement::is_involution));
    Ok(GeneratingSet {
        shape,
        elements,
        names,
    })
}

/// Cayley graph on all `8^k * 2^l` elements with edges `{g, s*g}` for every
/// generator `s` (left multiplication). Vertices are indexed by the
/// mixed-radix element encoding and labeled by element normal forms.
pub fn cayley_graph(gens: &GeneratingSet) -> Result<CompactGraph> {
    let shape = gens.shape();
    let order = shape.order();
    if order > MAX_ORDER {
        return Err(Error::invalid(format!(
            "group order {order} exceeds maximum graph order {MAX_ORDER}"
        )));
    }
    for (s, name) in gens.elements().iter().zip(gens.names()) {
        if s.shape() != shape {
            return Err(Error::invalid(format!("generator {name} has wrong shape")));
        }
        if !s.is_involution() {
            return Err(Error::invalid(format!(
                "generator {name} is not an involution"
            )));
        }
    }
    let mut builder = GraphBuilder::new(order)?;
    let mut labels = Vec::with_capacity(order);
    for idx in 0..order {
        let g = DihedralProductElement::from_index(shape, idx);
        debug_assert_eq!(g.index(), idx);
        for s in gens.elements() {
            let sg = s.multiply(&g)?;
            builder.add_edge(idx, sg.index())?;
        }
        labels.push(g.name());
    }
    builder.build_labeled(labels)
}

/// Index-2 subgroup data produced by removing one generator.
pub struct CosetDecomposition {
    /// Membership of `M = <generators - removed>` as a set of element indices.
    pub membership: VertexSet,
    /// Right-translation map `u -> u * removed`, by element index.
    pub coset_map: Vec<usize>,
    /// Name of the removed generator.
    pub removed: String,
}

/// Computes `M = <gens - {removed}>` by closure and the right-coset map
/// `u -> u*b`. Fails unless `M` has index exactly 2 (removing `a_i^2`
/// regenerates the whole group, for example).
pub fn coset_decomposition(gens: &GeneratingSet, removed: usize) -> Result<CosetDecomposition> {
    if removed >= gens.len() {
        return Err(Error::invalid(format!(
            "generator index {removed} out of range ({} generators)",
            gens.len()
        )));
    }
    let shape = gens.shape();
    let order = shape.order();
    let b = &gens.elements()[removed];
    let rest = gens.without(removed);

    let mut membership = VertexSet::new(order);
    let mut stack = vec![shape.identity()];
    membership.insert(shape.identity().index());
    while let Some(g) = stack.pop() {
        for s in rest.elements() {
            let sg = s.multiply(&g)?;
            let idx = sg.index();
            if !membership.contains(idx) {
                membership.insert(idx);
                stack.push(sg);
            }
        }
    }
    if membership.len() != order / 2 {
        return Err(Error::NotIndexTwo {
            generator: gens.names()[removed].clone(),
        });
    }
    let coset_map = (0..order)
        .map(|idx| {
            DihedralProductElement::from_index(shape, idx)
                .multiply(b)
                .map(|ub| ub.index())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CosetDecomposition {
        membership,
        coset_map,
        removed: gens.names()[removed].clone(),
    })
}
