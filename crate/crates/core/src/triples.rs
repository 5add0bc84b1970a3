//! Pythagorean triples over any unsigned integer width.
//!
//! Primitives come from Euclid's parametrisation
//! `(m² − k², 2mk, m² + k²)` with `m > k`, `gcd(m, k) = 1` and `m − k` odd.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use num_integer::{Integer, Roots};
use num_traits::{PrimInt, Unsigned};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Unsigned integer types the triple engine runs on.
pub trait TripleScalar:
    PrimInt + Unsigned + Integer + Roots + Hash + fmt::Debug + fmt::Display + Send + Sync
{
    /// Largest hypotenuse whose `2c²` still fits the type.
    fn max_hypotenuse() -> Self {
        (Self::max_value() / (Self::one() + Self::one())).sqrt()
    }

    fn widen(self) -> u128 {
        self.to_u128().expect("unsigned value fits u128")
    }
}

impl<T> TripleScalar for T where
    T: PrimInt + Unsigned + Integer + Roots + Hash + fmt::Debug + fmt::Display + Send + Sync
{
}

fn square<T: TripleScalar>(x: T) -> Option<T> {
    x.checked_mul(&x)
}

/// `a² + b² = c²` after sorting, with checked arithmetic.
pub fn is_pythagorean<T: TripleScalar>(a: T, b: T, c: T) -> Result<bool> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::NonPositive {
            a: a.widen(),
            b: b.widen(),
            c: c.widen(),
        });
    }
    let mut v = [a, b, c];
    v.sort_unstable();
    let [a, b, c] = v;
    let lhs = square(a).and_then(|x| square(b).and_then(|y| x.checked_add(&y)));
    match (lhs, square(c)) {
        (Some(l), Some(r)) => Ok(a < b && l == r),
        _ => Err(overflow(c)),
    }
}

fn overflow<T: TripleScalar>(bound: T) -> Error {
    Error::Overflow {
        bound: bound.to_string(),
        max: T::max_hypotenuse().to_string(),
    }
}

/// A Pythagorean triple `a < b < c` with its primitive root and scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triple<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub primitive: bool,
    pub root: [T; 3],
    pub scale: T,
}

impl<T: TripleScalar> Triple<T> {
    /// Accepts the three values in any order.
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        if !is_pythagorean(a, b, c)? {
            return Err(Error::NotPythagorean {
                a: a.widen(),
                b: b.widen(),
                c: c.widen(),
            });
        }
        let mut v = [a, b, c];
        v.sort_unstable();
        let [a, b, c] = v;
        let scale = a.gcd(&b).gcd(&c);
        Ok(Triple {
            a,
            b,
            c,
            primitive: scale.is_one(),
            root: [a / scale, b / scale, c / scale],
            scale,
        })
    }

    pub fn sides(&self) -> [T; 3] {
        [self.a, self.b, self.c]
    }

    pub fn root_triple(&self) -> Triple<T> {
        let [a, b, c] = self.root;
        Triple {
            a,
            b,
            c,
            primitive: true,
            root: self.root,
            scale: T::one(),
        }
    }

    /// `k·(a, b, c)`, or `None` on overflow.
    pub fn scaled(&self, k: T) -> Option<Triple<T>> {
        if k.is_zero() {
            return None;
        }
        let c = self.c.checked_mul(&k)?;
        if c > T::max_hypotenuse() {
            return None;
        }
        Some(Triple {
            a: self.a * k,
            b: self.b * k,
            c,
            primitive: self.primitive && k.is_one(),
            root: self.root,
            scale: self.scale * k,
        })
    }
}

impl<T: fmt::Display> fmt::Display for Triple<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl<T: TripleScalar> Serialize for Triple<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Triple", 6)?;
        st.serialize_field("a", &self.a.widen())?;
        st.serialize_field("b", &self.b.widen())?;
        st.serialize_field("c", &self.c.widen())?;
        st.serialize_field("primitive", &self.primitive)?;
        st.serialize_field("root", &self.root.map(TripleScalar::widen))?;
        st.serialize_field("scale", &self.scale.widen())?;
        st.end()
    }
}

/// All primitive triples with `c ≤ c_max`, ascending by `(c, a)`.
pub fn primitive_triples_up_to<T: TripleScalar>(c_max: T) -> Result<Vec<Triple<T>>> {
    if c_max > T::max_hypotenuse() {
        return Err(overflow(c_max));
    }
    let one = T::one();
    let two = one + one;
    let mut out = Vec::new();
    let mut m = two;
    while m * m + one <= c_max {
        let mut k = if m.is_odd() { two } else { one };
        while k < m {
            let c = m * m + k * k;
            if c > c_max {
                break;
            }
            if m.gcd(&k).is_one() {
                let (x, y) = (m * m - k * k, two * m * k);
                let (a, b) = if x < y { (x, y) } else { (y, x) };
                out.push(Triple {
                    a,
                    b,
                    c,
                    primitive: true,
                    root: [a, b, c],
                    scale: one,
                });
            }
            k = k + two;
        }
        m = m + one;
    }
    out.sort_unstable_by_key(|t| (t.c, t.a));
    Ok(out)
}

/// Every triple (primitive or not) with `c ≤ c_max`, ascending by `(c, a)`.
pub fn triples_up_to<T: TripleScalar>(c_max: T) -> Result<Vec<Triple<T>>> {
    let mut out = Vec::new();
    for p in primitive_triples_up_to(c_max)? {
        let mut k = T::one();
        while let Some(t) = p.scaled(k) {
            if t.c > c_max {
                break;
            }
            out.push(t);
            k = k + T::one();
        }
    }
    out.sort_unstable_by_key(|t| (t.c, t.a));
    Ok(out)
}

/// The five labelled primitives, in type order `t1..t5`.
pub const LABELLED_TYPES: [[u64; 3]; 5] = [
    [3, 4, 5],
    [20, 21, 29],
    [28, 45, 53],
    [48, 55, 73],
    [65, 72, 97],
];

/// Classification of a triple by its primitive root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TripleType {
    /// Root is the `i`-th labelled primitive.
    T(u8),
    /// Root is the `m`-th unlabelled primitive in ascending `(c, a)` order.
    E(u64),
}

impl fmt::Display for TripleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TripleType::T(i) => write!(f, "t{i}"),
            TripleType::E(m) => write!(f, "e{m}"),
        }
    }
}

impl Serialize for TripleType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn labelled_index(root: [u128; 3]) -> Option<u8> {
    LABELLED_TYPES
        .iter()
        .position(|t| t.map(u128::from) == root)
        .map(|i| i as u8 + 1)
}

/// Type of `t`: multiples inherit the type of their root.
pub fn classify<T: TripleScalar>(t: &Triple<T>) -> TripleType {
    let root = t.root.map(TripleScalar::widen);
    if let Some(i) = labelled_index(root) {
        return TripleType::T(i);
    }
    let [ra, _, rc] = t.root;
    let rank = primitive_triples_up_to(rc)
        .expect("root hypotenuse is within range")
        .into_iter()
        .filter(|p| (p.c, p.a) < (rc, ra))
        .filter(|p| labelled_index(p.sides().map(TripleScalar::widen)).is_none())
        .count();
    TripleType::E(rank as u64 + 1)
}

/// Types of every primitive root up to a hypotenuse bound, ranked once.
/// [`classify`] redoes the ranking per call.
#[derive(Debug, Clone)]
pub struct TypeIndex<T> {
    c_max: T,
    types: HashMap<[T; 3], TripleType>,
}

impl<T: TripleScalar> TypeIndex<T> {
    pub fn up_to(c_max: T) -> Result<Self> {
        let mut types = HashMap::new();
        let mut rank = 0;
        for p in primitive_triples_up_to(c_max)? {
            let t = match labelled_index(p.sides().map(TripleScalar::widen)) {
                Some(i) => TripleType::T(i),
                None => {
                    rank += 1;
                    TripleType::E(rank)
                }
            };
            types.insert(p.root, t);
        }
        Ok(TypeIndex { c_max, types })
    }

    /// Falls back to [`classify`] for roots beyond the bound.
    pub fn classify(&self, t: &Triple<T>) -> TripleType {
        match self.types.get(&t.root) {
            Some(&ty) => ty,
            None => {
                debug_assert!(t.root[2] > self.c_max);
                classify(t)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pythagorean_check() {
        assert!(is_pythagorean(3u64, 4, 5).unwrap());
        assert!(is_pythagorean(4u64, 3, 5).unwrap());
        assert!(!is_pythagorean(2u64, 3, 4).unwrap());
        assert!(matches!(
            is_pythagorean(0u64, 3, 4),
            Err(Error::NonPositive { .. })
        ));
        assert!(matches!(
            is_pythagorean(u64::MAX, 3, 4),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn euclid_small_ranges() {
        let t = primitive_triples_up_to(5u64).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].sides(), [3, 4, 5]);
        assert!(primitive_triples_up_to(4u64).unwrap().is_empty());
        assert!(primitive_triples_up_to(0u64).unwrap().is_empty());
        let t = primitive_triples_up_to(30u64).unwrap();
        assert_eq!(t.len(), 5);
        assert!(t.iter().any(|t| t.sides() == [20, 21, 29]));
    }

    #[test]
    fn hypotenuse_guard() {
        assert_eq!(u64::max_hypotenuse(), 3_037_000_499);
        assert!(matches!(
            primitive_triples_up_to(4_000_000_000u64),
            Err(Error::Overflow { .. })
        ));
        assert!(matches!(
            primitive_triples_up_to(u32::MAX),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn root_and_scale() {
        let t = Triple::new(8u64, 6, 10).unwrap();
        assert_eq!(t.sides(), [6, 8, 10]);
        assert!(!t.primitive);
        assert_eq!((t.root, t.scale), ([3, 4, 5], 2));
        assert!(matches!(
            Triple::new(2u64, 3, 4),
            Err(Error::NotPythagorean { a: 2, b: 3, c: 4 })
        ));
    }

    #[test]
    fn classification() {
        assert_eq!(
            classify(&Triple::new(6u64, 8, 10).unwrap()),
            TripleType::T(1)
        );
        assert_eq!(
            classify(&Triple::new(20u64, 21, 29).unwrap()),
            TripleType::T(2)
        );
        assert_eq!(
            classify(&Triple::new(65u64, 72, 97).unwrap()),
            TripleType::T(5)
        );
        assert_eq!(
            classify(&Triple::new(5u64, 12, 13).unwrap()),
            TripleType::E(1)
        );
        assert_eq!(
            classify(&Triple::new(8u64, 15, 17).unwrap()),
            TripleType::E(2)
        );
        assert_eq!(
            classify(&Triple::new(40u64, 42, 58).unwrap()),
            TripleType::T(2)
        );
        // (33,56,65) sorts after (16,63,65)
        assert_eq!(
            classify(&Triple::new(16u64, 63, 65).unwrap()),
            TripleType::E(7)
        );
        assert_eq!(
            classify(&Triple::new(33u64, 56, 65).unwrap()),
            TripleType::E(8)
        );
        assert_eq!(TripleType::E(3).to_string(), "e3");
    }

    #[test]
    fn type_index_agrees_with_classify() {
        let index = TypeIndex::up_to(300u64).unwrap();
        for t in triples_up_to(300u64).unwrap() {
            assert_eq!(index.classify(&t), classify(&t), "{t}");
        }
        let far = Triple::new(20u64, 99, 101).unwrap();
        assert_eq!(
            TypeIndex::up_to(50u64).unwrap().classify(&far),
            classify(&far)
        );
    }

    #[test]
    fn narrow_and_wide_types_agree() {
        let narrow: Vec<[u128; 3]> = primitive_triples_up_to(180u16)
            .unwrap()
            .iter()
            .map(|t| t.sides().map(TripleScalar::widen))
            .collect();
        let wide: Vec<[u128; 3]> = primitive_triples_up_to(180u128)
            .unwrap()
            .iter()
            .map(|t| t.sides())
            .collect();
        assert_eq!(narrow, wide);
    }
}
