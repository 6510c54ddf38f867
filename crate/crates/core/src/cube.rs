//! Cube arrangements over a free strictly-commutative Picard category.
//!
//! Objects are finite integer combinations of symbols ([`FormalObject`]); the
//! tensor product is addition and the inverse is negation, so every
//! commutativity or associativity isomorphism of the strict theory becomes an
//! equality. An n-dimensional [`CubeArrangement`] assigns one object to each
//! of the `2^n` vertices of `{0,1}^n`. Its [`delta`] is the signed formal sum
//! of the vertex objects, kept as an element of the free abelian group on
//! objects ([`FormalSum`]) so that Euler characteristics can be applied
//! termwise.
//!
//! Directions are 0-based throughout: direction `i` is coordinate `i` of a
//! vertex. Grades are carried alongside the symbol part and add under tensor
//! product; the sign rule for swapping graded objects is
//! [`graded_swap_sign`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::{ChiFunction, DegreeVector};
use crate::poly::Rational;

/// A vertex of `{0,1}^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex(Vec<u8>);

impl Vertex {
    /// Panics if a coordinate is not 0 or 1.
    pub fn new(bits: Vec<u8>) -> Self {
        assert!(
            bits.iter().all(|&b| b <= 1),
            "vertex coordinates must be 0 or 1"
        );
        Vertex(bits)
    }

    fn from_index(index: usize, n: usize) -> Self {
        Vertex((0..n).map(|i| (index >> i & 1) as u8).collect())
    }

    fn index(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &b)| (b as usize) << i)
            .sum()
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&b| b as usize).sum()
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u8::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `(-1)^{n - sum s_i}`.
pub fn epsilon(s: &Vertex) -> i64 {
    if (s.dimension() - s.weight()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The total order on vertices: smaller coordinate sum first; on ties the
/// first differing coordinate decides, and a 1 there comes first.
pub fn vertex_order(s: &Vertex, t: &Vertex) -> Result<Ordering> {
    if s.dimension() != t.dimension() {
        return Err(Error::LengthMismatch {
            left: s.dimension(),
            right: t.dimension(),
        });
    }
    Ok(s.weight().cmp(&t.weight()).then_with(|| {
        s.0.iter()
            .zip(&t.0)
            .find(|(a, b)| a != b)
            .map_or(Ordering::Equal, |(a, b)| b.cmp(a))
    }))
}

/// All vertices of `{0,1}^n` sorted by [`vertex_order`].
pub fn vertices_in_order(n: usize) -> Vec<Vertex> {
    let mut v: Vec<Vertex> = (0..1usize << n).map(|i| Vertex::from_index(i, n)).collect();
    v.sort_by(|a, b| vertex_order(a, b).expect("same dimension"));
    v
}

/// Opaque generator of the free Picard category, optionally carrying its
/// class in a degree lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    name: String,
    degree: Option<DegreeVector>,
}

impl Symbol {
    pub fn new(name: impl Into<String>) -> Self {
        Symbol {
            name: name.into(),
            degree: None,
        }
    }

    pub fn with_degree(name: impl Into<String>, degree: DegreeVector) -> Self {
        Symbol {
            name: name.into(),
            degree: Some(degree),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> Option<&DegreeVector> {
        self.degree.as_ref()
    }
}

/// An object of the free graded strictly-commutative Picard category.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FormalObject {
    coefficients: BTreeMap<Symbol, i64>,
    grade: i64,
}

impl FormalObject {
    /// The unit object.
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn symbol(s: Symbol) -> Self {
        Self::from_terms([(s, 1)], 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (Symbol, i64)>>(terms: I, grade: i64) -> Self {
        let mut out = FormalObject {
            coefficients: BTreeMap::new(),
            grade,
        };
        for (s, c) in terms {
            out.add_symbol(s, c);
        }
        out
    }

    fn add_symbol(&mut self, s: Symbol, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coefficients.entry(s).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coefficients.retain(|_, v| *v != 0);
        }
    }

    pub fn with_grade(mut self, grade: i64) -> Self {
        self.grade = grade;
        self
    }

    pub fn grade(&self) -> i64 {
        self.grade
    }

    pub fn coefficients(&self) -> &BTreeMap<Symbol, i64> {
        &self.coefficients
    }

    pub fn is_unit(&self) -> bool {
        self.coefficients.is_empty() && self.grade == 0
    }

    /// Tensor product.
    pub fn tensor(&self, other: &FormalObject) -> FormalObject {
        self.combine(other, 1)
    }

    /// `self ⊗ other^{-1}`.
    pub fn tensor_inverse(&self, other: &FormalObject) -> FormalObject {
        self.combine(other, -1)
    }

    pub fn power(&self, k: i64) -> FormalObject {
        FormalObject::unit().combine(self, k)
    }

    fn combine(&self, other: &FormalObject, k: i64) -> FormalObject {
        let mut out = self.clone();
        for (s, c) in &other.coefficients {
            out.add_symbol(s.clone(), k * c);
        }
        out.grade += k * other.grade;
        out
    }

    /// Class in the degree lattice of the given arity.
    pub fn degree(&self, arity: usize) -> Result<DegreeVector> {
        let mut acc = DegreeVector::zero(arity);
        for (s, &c) in &self.coefficients {
            match &s.degree {
                Some(d) if d.arity() == arity => acc = acc.add(&d.scaled(c)),
                _ => {
                    return Err(Error::UntaggedSymbol {
                        symbol: s.name.clone(),
                    })
                }
            }
        }
        Ok(acc)
    }

    pub fn chi(&self, chi: &ChiFunction) -> Result<Rational> {
        chi.evaluate(&self.degree(chi.arity())?)
    }
}

impl fmt::Display for FormalObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            write!(f, "O")?;
        } else {
            let parts: Vec<String> = self
                .coefficients
                .iter()
                .map(|(s, c)| match c {
                    1 => s.name.clone(),
                    _ => format!("{c}{}", s.name),
                })
                .collect();
            write!(f, "{}", parts.join("+"))?;
        }
        if self.grade != 0 {
            write!(f, "[{}]", self.grade)?;
        }
        Ok(())
    }
}

/// Element of the free abelian group on objects: `sum n_k [obj_k]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalSum(BTreeMap<FormalObject, i64>);

impl FormalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, obj: FormalObject, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.0.entry(obj.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&obj);
        }
    }

    pub fn plus(&self, other: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        for (o, &c) in &other.0 {
            out.add_term(o.clone(), c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FormalObject, i64)> {
        self.0.iter().map(|(o, &c)| (o, c))
    }

    /// Signed sum of the grades.
    pub fn grade(&self) -> i64 {
        self.0.iter().map(|(o, c)| c * o.grade).sum()
    }

    /// Image in the Picard group itself, where `[A] + [B] = [A ⊗ B]`.
    pub fn collapse(&self) -> FormalObject {
        self.0
            .iter()
            .fold(FormalObject::unit(), |acc, (o, &c)| acc.tensor(&o.power(c)))
    }

    /// Applies `chi` to every object and sums with the coefficients.
    pub fn evaluate_chi(&self, chi: &ChiFunction) -> Result<Rational> {
        let mut total = Rational::zero();
        for (o, &c) in &self.0 {
            total += o.chi(chi)? * Rational::from_integer(c.into());
        }
        Ok(total)
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|(o, c)| format!("{c}[{o}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Which `(n-1)`-face in a given direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Coordinate fixed to 0.
    Back,
    /// Coordinate fixed to 1.
    Front,
}

/// Assignment of an object to every vertex of `{0,1}^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeArrangement {
    dimension: usize,
    // indexed by sum_i s_i 2^i
    vertices: Vec<FormalObject>,
}

impl CubeArrangement {
    /// Builds an arrangement from `f(s)` for every vertex `s`.
    pub fn from_fn(dimension: usize, mut f: impl FnMut(&Vertex) -> FormalObject) -> Self {
        let vertices = (0..1usize << dimension)
            .map(|i| f(&Vertex::from_index(i, dimension)))
            .collect();
        CubeArrangement {
            dimension,
            vertices,
        }
    }

    /// Vertices listed in [`vertex_order`].
    pub fn from_ordered(dimension: usize, objects: Vec<FormalObject>) -> Result<Self> {
        if objects.len() != 1usize << dimension {
            return Err(Error::LengthMismatch {
                left: 1usize << dimension,
                right: objects.len(),
            });
        }
        let mut vertices = vec![FormalObject::unit(); objects.len()];
        for (v, o) in vertices_in_order(dimension).iter().zip(objects) {
            vertices[v.index()] = o;
        }
        Ok(CubeArrangement {
            dimension,
            vertices,
        })
    }

    /// The 1-cube `(back -- front)`.
    pub fn edge(back: FormalObject, front: FormalObject) -> Self {
        CubeArrangement {
            dimension: 1,
            vertices: vec![back, front],
        }
    }

    pub fn constant(dimension: usize, obj: FormalObject) -> Self {
        Self::from_fn(dimension, |_| obj.clone())
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn at(&self, s: &Vertex) -> Result<&FormalObject> {
        if s.dimension() != self.dimension {
            return Err(Error::LengthMismatch {
                left: self.dimension,
                right: s.dimension(),
            });
        }
        Ok(&self.vertices[s.index()])
    }

    /// `(vertex, object)` pairs in [`vertex_order`].
    pub fn ordered(&self) -> Vec<(Vertex, &FormalObject)> {
        vertices_in_order(self.dimension)
            .into_iter()
            .map(|v| {
                let i = v.index();
                (v, &self.vertices[i])
            })
            .collect()
    }

    fn check_direction(&self, i: usize) -> Result<()> {
        if i >= self.dimension {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.dimension,
            });
        }
        Ok(())
    }

    /// Pullback along the inclusion of the back or front face in direction `i`.
    pub fn face(&self, i: usize, side: Side) -> Result<CubeArrangement> {
        self.check_direction(i)?;
        let fixed = match side {
            Side::Back => 0,
            Side::Front => 1,
        };
        Ok(CubeArrangement::from_fn(self.dimension - 1, |t| {
            let mut bits = t.0.clone();
            bits.insert(i, fixed);
            self.vertices[Vertex(bits).index()].clone()
        }))
    }

    /// Sub-arrangement with several coordinates fixed; `fixed` maps direction
    /// to value and the remaining coordinates keep their relative order.
    pub fn restrict(&self, fixed: &BTreeMap<usize, u8>) -> Result<CubeArrangement> {
        for &i in fixed.keys() {
            self.check_direction(i)?;
        }
        let free = self.dimension - fixed.len();
        Ok(CubeArrangement::from_fn(free, |t| {
            let mut bits = Vec::with_capacity(self.dimension);
            let mut rest = t.0.iter();
            for k in 0..self.dimension {
                match fixed.get(&k) {
                    Some(&b) => bits.push(b),
                    None => bits.push(*rest.next().expect("free coordinate")),
                }
            }
            self.vertices[Vertex(bits).index()].clone()
        }))
    }

    /// The `(n+1)`-cube with `back` and `front` as its faces in direction `i`.
    /// Panics if the faces differ in dimension or `i > n`.
    pub fn stack(back: &CubeArrangement, front: &CubeArrangement, i: usize) -> CubeArrangement {
        assert_eq!(back.dimension, front.dimension, "face dimensions differ");
        assert!(i <= back.dimension, "direction out of range");
        CubeArrangement::from_fn(back.dimension + 1, |s| {
            let mut bits = s.0.clone();
            let side = bits.remove(i);
            let face = if side == 0 { back } else { front };
            face.vertices[Vertex(bits).index()].clone()
        })
    }

    /// Replaces every grade by the Euler characteristic of the vertex object.
    pub fn with_chi_grades(&self, chi: &ChiFunction) -> Result<CubeArrangement> {
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for o in &self.vertices {
            let value = o.chi(chi)?;
            vertices.push(o.clone().with_grade(integer_value(&value)?));
        }
        Ok(CubeArrangement {
            dimension: self.dimension,
            vertices,
        })
    }
}

fn integer_value(v: &Rational) -> Result<i64> {
    if !v.is_integer() {
        return Err(Error::ChiMismatch {
            values: vec![v.to_string()],
        });
    }
    v.to_integer().to_i64().ok_or_else(|| Error::ChiMismatch {
        values: vec![v.to_string()],
    })
}

/// `sum_s epsilon(s) [K_s]`.
pub fn delta(k: &CubeArrangement) -> FormalSum {
    let mut out = FormalSum::zero();
    for (i, obj) in k.vertices.iter().enumerate() {
        out.add_term(obj.clone(), epsilon(&Vertex::from_index(i, k.dimension)));
    }
    out
}

/// Glues `a = (U -i- V)` and `b = (V -i- W)` into `(U -i- W)`.
pub fn glue(a: &CubeArrangement, b: &CubeArrangement, i: usize) -> Result<CubeArrangement> {
    if a.dimension != b.dimension {
        return Err(Error::LengthMismatch {
            left: a.dimension,
            right: b.dimension,
        });
    }
    let front = a.face(i, Side::Front)?;
    let back = b.face(i, Side::Back)?;
    for (v, o) in front.ordered() {
        if back.at(&v)? != o {
            return Err(Error::FaceMismatch {
                vertex: v.to_string(),
            });
        }
    }
    Ok(CubeArrangement::from_fn(a.dimension, |s| {
        if s.0[i] == 0 {
            a.vertices[s.index()].clone()
        } else {
            b.vertices[s.index()].clone()
        }
    }))
}

/// `sigma^* K`: the vertex `s` receives `K((s_{sigma[0]}, ..., s_{sigma[n-1]}))`.
///
/// With this convention the `k`-th edge of `sigma^* K_{L0}(L_0', ...)` is the
/// `sigma[k]`-th edge of the original.
pub fn permute(k: &CubeArrangement, sigma: &[usize]) -> Result<CubeArrangement> {
    let n = k.dimension;
    let mut seen = vec![false; n];
    let valid = sigma.len() == n
        && sigma
            .iter()
            .all(|&j| j < n && !std::mem::replace(&mut seen[j], true));
    if !valid {
        return Err(Error::BadPermutation {
            n,
            perm: sigma.to_vec(),
        });
    }
    // s'_{sigma[j]} = s_j, i.e. the source vertex of s is t with t_j = s_{sigma^{-1}(j)}
    let mut inverse = vec![0; n];
    for (j, &sj) in sigma.iter().enumerate() {
        inverse[sj] = j;
    }
    Ok(CubeArrangement::from_fn(n, |s| {
        let t: Vec<u8> = (0..n).map(|j| s.0[inverse[j]]).collect();
        k.vertices[Vertex(t).index()].clone()
    }))
}

/// `K_{L0}(L_1, ..., L_n)` with vertex `s` holding `L0 ⊗ L_1^{s_1} ⊗ ... ⊗ L_n^{s_n}`.
pub fn standard_cube(l0: &FormalObject, edges: &[FormalObject]) -> CubeArrangement {
    CubeArrangement::from_fn(edges.len(), |s| {
        edges
            .iter()
            .zip(s.bits())
            .filter(|(_, &b)| b == 1)
            .fold(l0.clone(), |acc, (e, _)| acc.tensor(e))
    })
}

/// Recovers `(L0, [L_1, ..., L_n])` from an arrangement of standard shape,
/// or `None` when some vertex violates the standard vertex formula.
pub fn edges(k: &CubeArrangement) -> Option<(FormalObject, Vec<FormalObject>)> {
    let n = k.dimension;
    let l0 = k.vertices[0].clone();
    let es: Vec<FormalObject> = (0..n)
        .map(|i| k.vertices[1 << i].tensor_inverse(&l0))
        .collect();
    if standard_cube(&l0, &es) == *k {
        Some((l0, es))
    } else {
        None
    }
}

/// `(-1)^{d e}`: the sign of the symmetry `(L,d) ⊗ (M,e) -> (M,e) ⊗ (L,d)`.
pub fn graded_swap_sign(d: i64, e: i64) -> i64 {
    if d.is_odd() && e.is_odd() {
        -1
    } else {
        1
    }
}

/// The four sub-arrangements of `k` obtained by fixing directions `i` and `j`,
/// as `[A, B, C, D]` with `(s_i, s_j) = (0,0), (1,0), (0,1), (1,1)`.
pub fn two_face_split(k: &CubeArrangement, i: usize, j: usize) -> Result<[CubeArrangement; 4]> {
    if i == j {
        return Err(Error::IndexOutOfRange {
            index: j,
            bound: k.dimension,
        });
    }
    let sub = |a: u8, b: u8| k.restrict(&BTreeMap::from([(i, a), (j, b)]));
    Ok([sub(0, 0)?, sub(1, 0)?, sub(0, 1)?, sub(1, 1)?])
}

/// `(-1)^{chi(A)}` where `A, B, C, D` are the corners of `k` viewed as a square
/// in directions `i, j` and `chi(X)` is `chi` applied termwise to `delta(X)`.
/// Fails with [`Error::ChiMismatch`] unless the four values agree.
pub fn epsilon_ij(k: &CubeArrangement, i: usize, j: usize, chi: &ChiFunction) -> Result<i64> {
    let corners = two_face_split(k, i, j)?;
    let values = corners
        .iter()
        .map(|c| delta(c).evaluate_chi(chi))
        .collect::<Result<Vec<_>>>()?;
    if values.iter().any(|v| v != &values[0]) {
        return Err(Error::ChiMismatch {
            values: values.iter().map(ToString::to_string).collect(),
        });
    }
    let chi_a = integer_value(&values[0])?;
    Ok(if chi_a.is_odd() { -1 } else { 1 })
}

/// Sign picked up by exchanging the middle factors `delta(B)` and `delta(C)`
/// of `delta(K) = delta(A) ⊗ delta(B)^{-1} ⊗ delta(C)^{-1} ⊗ delta(D)` when
/// grades are tracked, i.e. `graded_swap_sign(grade delta(B), grade delta(C))`.
pub fn graded_exchange_sign(k: &CubeArrangement, i: usize, j: usize) -> Result<i64> {
    let [_, b, c, _] = two_face_split(k, i, j)?;
    Ok(graded_swap_sign(delta(&b).grade(), delta(&c).grade()))
}

/// Text/JSON form of an arrangement: dimension, optional degree tags per
/// symbol name, and the vertex objects in [`vertex_order`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubeDocument {
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub symbols: BTreeMap<String, DegreeVector>,
    pub vertices: Vec<ObjectDocument>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectDocument {
    #[serde(default)]
    pub terms: BTreeMap<String, i64>,
    #[serde(default)]
    pub grade: i64,
}

impl ObjectDocument {
    pub fn from_object(o: &FormalObject) -> Self {
        ObjectDocument {
            terms: o
                .coefficients
                .iter()
                .map(|(s, &c)| (s.name.clone(), c))
                .collect(),
            grade: o.grade,
        }
    }

    pub fn to_object(&self, symbols: &BTreeMap<String, DegreeVector>) -> FormalObject {
        FormalObject::from_terms(
            self.terms.iter().map(|(name, &c)| {
                let s = match symbols.get(name) {
                    Some(d) => Symbol::with_degree(name.clone(), d.clone()),
                    None => Symbol::new(name.clone()),
                };
                (s, c)
            }),
            self.grade,
        )
    }
}

impl CubeDocument {
    pub fn from_arrangement(k: &CubeArrangement) -> Self {
        let mut symbols = BTreeMap::new();
        for o in &k.vertices {
            for s in o.coefficients.keys() {
                if let Some(d) = &s.degree {
                    symbols.insert(s.name.clone(), d.clone());
                }
            }
        }
        CubeDocument {
            dimension: k.dimension,
            symbols,
            vertices: k
                .ordered()
                .into_iter()
                .map(|(_, o)| ObjectDocument::from_object(o))
                .collect(),
        }
    }

    pub fn to_arrangement(&self) -> Result<CubeArrangement> {
        CubeArrangement::from_ordered(
            self.dimension,
            self.vertices
                .iter()
                .map(|o| o.to_object(&self.symbols))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(name: &str) -> FormalObject {
        FormalObject::symbol(Symbol::new(name))
    }

    fn tagged(name: &str, d: i64) -> FormalObject {
        FormalObject::symbol(Symbol::with_degree(name, DegreeVector(vec![d])))
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(&Vertex::new(vec![1, 1, 1])), 1);
        assert_eq!(epsilon(&Vertex::new(vec![0, 0])), 1);
        assert_eq!(epsilon(&Vertex::new(vec![0, 1, 1])), -1);
    }

    #[test]
    fn order_examples() {
        let v = |b: &[u8]| Vertex::new(b.to_vec());
        assert_eq!(
            vertex_order(&v(&[0, 0]), &v(&[1, 0])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            vertex_order(&v(&[1, 0]), &v(&[0, 1])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            vertex_order(&v(&[1, 1]), &v(&[1, 1])).unwrap(),
            Ordering::Equal
        );
        assert!(vertex_order(&v(&[1]), &v(&[1, 0])).is_err());
        let order: Vec<Vec<u8>> = vertices_in_order(2).into_iter().map(|v| v.0).collect();
        assert_eq!(order, vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn delta_examples() {
        let (l, m) = (sym("L"), sym("M"));
        let d = delta(&CubeArrangement::edge(l.clone(), m.clone()));
        let mut expected = FormalSum::zero();
        expected.add_term(m, 1);
        expected.add_term(l.clone(), -1);
        assert_eq!(d, expected);

        let (l1, l2) = (sym("L1"), sym("L2"));
        let sq = standard_cube(&FormalObject::unit(), &[l1.clone(), l2.clone()]);
        let mut expected = FormalSum::zero();
        expected.add_term(l1.tensor(&l2), 1);
        expected.add_term(l1, -1);
        expected.add_term(l2, -1);
        expected.add_term(FormalObject::unit(), 1);
        assert_eq!(delta(&sq), expected);
        assert!(delta(&sq).collapse().is_unit());

        for n in 1..4 {
            assert!(delta(&CubeArrangement::constant(n, l.clone())).is_zero());
        }
    }

    #[test]
    fn glue_examples() {
        let (l, m, n) = (sym("L"), sym("M"), sym("N"));
        let a = CubeArrangement::edge(l.clone(), m.clone());
        let b = CubeArrangement::edge(m.clone(), n.clone());
        assert_eq!(
            glue(&a, &b, 0).unwrap(),
            CubeArrangement::edge(l.clone(), n)
        );
        let c = CubeArrangement::edge(l.clone(), l.clone());
        assert_eq!(glue(&c, &c, 0).unwrap(), c);
        assert!(matches!(glue(&b, &a, 0), Err(Error::FaceMismatch { .. })));
    }

    #[test]
    fn permute_examples() {
        let (l1, l2) = (sym("L1"), sym("L2"));
        let k = standard_cube(&FormalObject::unit(), &[l1.clone(), l2.clone()]);
        assert_eq!(permute(&k, &[0, 1]).unwrap(), k);
        assert_eq!(
            permute(&k, &[1, 0]).unwrap(),
            standard_cube(&FormalObject::unit(), &[l2, l1])
        );
        assert!(matches!(
            permute(&k, &[0, 0]),
            Err(Error::BadPermutation { .. })
        ));
        assert!(matches!(
            permute(&k, &[0]),
            Err(Error::BadPermutation { .. })
        ));
    }

    #[test]
    fn face_examples() {
        let (l, m) = (sym("L"), sym("M"));
        let e = CubeArrangement::edge(l.clone(), m);
        let back = e.face(0, Side::Back).unwrap();
        assert_eq!(back.dimension(), 0);
        assert_eq!(back.at(&Vertex::new(vec![])).unwrap(), &l);

        let (l1, l2) = (sym("L1"), sym("L2"));
        let o = FormalObject::unit();
        let k = standard_cube(&o, &[l1.clone(), l2.clone()]);
        assert_eq!(
            k.face(1, Side::Back).unwrap(),
            standard_cube(&o, std::slice::from_ref(&l1))
        );
        assert_eq!(k.face(1, Side::Front).unwrap(), standard_cube(&l2, &[l1]));
        assert!(k.face(2, Side::Back).is_err());
    }

    #[test]
    fn standard_cube_and_edges() {
        let (l0, l1, l2) = (sym("A"), sym("B"), sym("C"));
        let k1 = standard_cube(&l0, std::slice::from_ref(&l1));
        assert_eq!(k1, CubeArrangement::edge(l0.clone(), l0.tensor(&l1)));
        let k2 = standard_cube(&l0, &[l1.clone(), l2.clone()]);
        assert_eq!(
            k2.at(&Vertex::new(vec![1, 1])).unwrap(),
            &l0.tensor(&l1).tensor(&l2)
        );
        assert_eq!(edges(&k2), Some((l0.clone(), vec![l1.clone(), l2.clone()])));

        let broken = CubeArrangement::from_fn(2, |s| {
            if s.weight() == 2 {
                sym("X")
            } else {
                k2.at(s).unwrap().clone()
            }
        });
        assert_eq!(edges(&broken), None);

        let (l, m) = (sym("L"), sym("M"));
        assert_eq!(
            edges(&CubeArrangement::edge(l.clone(), m.clone())),
            Some((l.clone(), vec![m.tensor_inverse(&l)]))
        );
        let zero = standard_cube(&l0, &[FormalObject::unit(), FormalObject::unit()]);
        assert!(delta(&zero).is_zero());
    }

    #[test]
    fn graded_sign_examples() {
        assert_eq!(graded_swap_sign(0, 7), 1);
        assert_eq!(graded_swap_sign(1, 1), -1);
        assert_eq!(graded_swap_sign(2, 3), 1);
        assert_eq!(graded_swap_sign(-3, 5), -1);
    }

    #[test]
    fn epsilon_ij_examples() {
        let chi = ChiFunction::projective(2);
        let even = CubeArrangement::constant(2, tagged("H", 1).power(3));
        assert_eq!(epsilon_ij(&even, 0, 1, &chi).unwrap(), 1);
        let odd = CubeArrangement::constant(2, tagged("H", 1));
        assert_eq!(epsilon_ij(&odd, 0, 1, &chi).unwrap(), -1);

        let bad = standard_cube(&FormalObject::unit(), &[tagged("H", 1), tagged("G", 2)]);
        assert!(matches!(
            epsilon_ij(&bad, 0, 1, &chi),
            Err(Error::ChiMismatch { .. })
        ));

        let untagged = CubeArrangement::constant(2, sym("L"));
        assert!(matches!(
            epsilon_ij(&untagged, 0, 1, &chi),
            Err(Error::UntaggedSymbol { .. })
        ));
    }

    #[test]
    fn epsilon_ij_on_four_cube_over_plane() {
        // A 4-cube over P^2: each 2-dimensional corner has chi equal to the
        // product of its two edge degrees.
        let chi = ChiFunction::projective(2);
        let k = standard_cube(
            &tagged("B", -1),
            &[
                tagged("H", 1),
                tagged("G", 2),
                tagged("H", 1),
                tagged("F", 3),
            ],
        );
        assert_eq!(epsilon_ij(&k, 0, 3, &chi).unwrap(), 1);
        assert_eq!(epsilon_ij(&k, 1, 2, &chi).unwrap(), 1 - 2);
        let graded = k.with_chi_grades(&chi).unwrap();
        for (i, j) in [(0, 1), (0, 2), (1, 3), (2, 3)] {
            assert_eq!(
                graded_exchange_sign(&graded, i, j).unwrap(),
                epsilon_ij(&k, i, j, &chi).unwrap()
            );
        }
    }

    #[test]
    fn document_round_trip() {
        let k = standard_cube(&tagged("A", 2), &[tagged("B", 1), sym("C").with_grade(3)]);
        let doc = CubeDocument::from_arrangement(&k);
        let json = serde_json::to_string(&doc).unwrap();
        let back: CubeDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_arrangement().unwrap(), k);
        assert_eq!(doc.vertices[0].terms.get("A"), Some(&1));
        assert_eq!(doc.vertices[1].terms.get("B"), Some(&1));
    }
}
