//! Arithmetic in the binary fields GF(2^k), 1 <= k <= 8.
//!
//! An element is a byte whose bits are the coefficients of a polynomial in
//! `z` of degree below `k`. Addition is XOR, multiplication is carry-less
//! shift-and-add followed by reduction modulo the field's irreducible
//! polynomial. Every field here has characteristic 2, so negation is the
//! identity and subtraction is addition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One element of some GF(2^k). Only meaningful together with its [`Field`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Elem(u8);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// Raw polynomial-basis bits. Range is not checked; use [`Field::elem`].
    pub const fn from_bits(bits: u8) -> Elem {
        Elem(bits)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// GF(2^k) described by its degree and a monic irreducible modulus.
///
/// The modulus is stored with its leading coefficient, so GF(4) with
/// `z^2 = z + 1` has modulus `0b111`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Field {
    degree: u8,
    modulus: u16,
}

impl Field {
    /// The two-element field.
    pub const GF2: Field = Field {
        degree: 1,
        modulus: 0b10,
    };
    /// `{0, 1, z, z + 1}` with `z^2 = z + 1`.
    pub const GF4: Field = Field {
        degree: 2,
        modulus: 0b111,
    };

    /// Builds GF(2^degree). `None` picks the default modulus: `z^2 + z + 1`
    /// for degree 2, otherwise the numerically smallest irreducible.
    pub fn new(degree: u32, modulus: Option<u16>) -> Result<Field> {
        if !(1..=8).contains(&degree) {
            return Err(Error::DegreeOutOfRange(degree));
        }
        let modulus = match modulus {
            Some(m) => {
                if poly_degree(m) != Some(degree) {
                    return Err(Error::ModulusDegree { modulus: m, degree });
                }
                if !is_irreducible(m) {
                    return Err(Error::ReducibleModulus(m));
                }
                m
            }
            None => default_modulus(degree),
        };
        Ok(Field {
            degree: degree as u8,
            modulus,
        })
    }

    pub fn degree(self) -> u32 {
        self.degree as u32
    }

    pub fn modulus(self) -> u16 {
        self.modulus
    }

    /// Number of elements, `2^degree`.
    pub fn size(self) -> usize {
        1usize << self.degree
    }

    pub fn is_gf2(self) -> bool {
        self.degree == 1
    }

    pub fn characteristic(self) -> u32 {
        2
    }

    /// Checked conversion from polynomial-basis bits.
    pub fn elem(self, value: u32) -> Result<Elem> {
        if (value as usize) < self.size() {
            Ok(Elem(value as u8))
        } else {
            Err(Error::ElementOutOfRange {
                value,
                degree: self.degree(),
            })
        }
    }

    /// All elements in increasing bit order, zero first.
    pub fn elements(self) -> impl Iterator<Item = Elem> {
        (0..self.size()).map(|v| Elem(v as u8))
    }

    #[inline]
    pub fn add(self, a: Elem, b: Elem) -> Elem {
        Elem(a.0 ^ b.0)
    }

    #[inline]
    pub fn sub(self, a: Elem, b: Elem) -> Elem {
        self.add(a, b)
    }

    #[inline]
    pub fn neg(self, a: Elem) -> Elem {
        a
    }

    #[inline]
    pub fn mul(self, a: Elem, b: Elem) -> Elem {
        if self.degree == 1 {
            return Elem(a.0 & b.0);
        }
        let top = 1u16 << self.degree;
        let mut x = a.0 as u16;
        let mut y = b.0;
        let mut acc = 0u16;
        while y != 0 {
            if y & 1 != 0 {
                acc ^= x;
            }
            y >>= 1;
            x <<= 1;
            if x & top != 0 {
                x ^= self.modulus;
            }
        }
        Elem(acc as u8)
    }

    /// Multiplicative inverse via `a^(2^k - 2)`.
    pub fn inv(self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut exp = self.size() - 2;
        let mut base = a;
        let mut acc = Elem::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        Ok(acc)
    }

    pub fn div(self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Text symbol for GF(2) and GF(4) elements: `0`, `1`, `z`, and `w` for
    /// `z + 1`. Larger fields have no symbolic names.
    pub fn symbol(self, a: Elem) -> Option<&'static str> {
        match (self.degree, a.0) {
            (1 | 2, 0) => Some("0"),
            (1 | 2, 1) => Some("1"),
            (2, 2) => Some("z"),
            (2, 3) => Some("w"),
            _ => None,
        }
    }

    pub fn parse_symbol(self, s: &str) -> Result<Elem> {
        match (self.degree, s) {
            (1 | 2, "0") => Ok(Elem(0)),
            (1 | 2, "1") => Ok(Elem(1)),
            (2, "z") => Ok(Elem(2)),
            (2, "w") => Ok(Elem(3)),
            _ => Err(Error::UnknownSymbol(s.to_string())),
        }
    }

    /// Name used by the matrix text format, when one exists.
    pub fn name(self) -> Option<&'static str> {
        match (self.degree, self.modulus) {
            (1, _) => Some("gf2"),
            (2, 0b111) => Some("gf4"),
            _ => None,
        }
    }

    pub fn from_name(name: &str) -> Option<Field> {
        match name {
            "gf2" => Some(Field::GF2),
            "gf4" => Some(Field::GF4),
            _ => None,
        }
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}; {:#b})", self.degree, self.modulus)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(name) => f.write_str(name),
            None => write!(f, "GF(2^{})", self.degree),
        }
    }
}

fn poly_degree(p: u16) -> Option<u32> {
    (p != 0).then(|| 15 - p.leading_zeros())
}

/// Remainder of `a` modulo `b` over GF(2)[z].
fn poly_rem(mut a: u16, b: u16) -> u16 {
    let db = poly_degree(b).expect("nonzero divisor");
    while let Some(da) = poly_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Trial division by every polynomial of degree 1..=deg/2.
fn is_irreducible(p: u16) -> bool {
    let Some(d) = poly_degree(p) else {
        return false;
    };
    if d == 0 {
        return false;
    }
    for q in 2u16..(1u16 << (d / 2 + 1)) {
        if poly_rem(p, q) == 0 {
            return false;
        }
    }
    true
}

fn default_modulus(degree: u32) -> u16 {
    match degree {
        1 => 0b10,
        2 => 0b111,
        _ => ((1u16 << degree)..(1u16 << (degree + 1)))
            .find(|&p| is_irreducible(p))
            .expect("irreducible polynomials exist in every degree"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Elem {
        Elem::from_bits(2)
    }
    fn w() -> Elem {
        Elem::from_bits(3)
    }

    #[test]
    fn gf2_has_characteristic_two() {
        let f = Field::new(1, None).unwrap();
        assert_eq!(f, Field::GF2);
        assert_eq!(f.add(Elem::ONE, Elem::ONE), Elem::ZERO);
    }

    #[test]
    fn default_gf4_is_z_squared_plus_z_plus_one() {
        let f = Field::new(2, None).unwrap();
        assert_eq!(f, Field::GF4);
        assert_eq!(f.elements().count(), 4);
        assert_eq!(f.mul(z(), z()), w());
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(matches!(
            Field::new(2, Some(0b100)),
            Err(Error::ReducibleModulus(0b100))
        ));
        assert!(matches!(Field::new(2, Some(0b101)), Err(Error::ReducibleModulus(_))));
        assert!(matches!(Field::new(9, None), Err(Error::DegreeOutOfRange(9))));
        assert!(matches!(Field::new(0, None), Err(Error::DegreeOutOfRange(0))));
        assert!(matches!(Field::new(3, Some(0b111)), Err(Error::ModulusDegree { .. })));
    }

    #[test]
    fn default_moduli_for_higher_degrees() {
        assert_eq!(Field::new(3, None).unwrap().modulus(), 0b1011);
        assert_eq!(Field::new(4, None).unwrap().modulus(), 0b10011);
        assert_eq!(Field::new(8, None).unwrap().modulus(), 0x11b);
    }

    #[test]
    fn additions_in_gf4() {
        let f = Field::GF4;
        assert_eq!(f.add(z(), Elem::ONE), w());
        assert_eq!(f.add(w(), z()), Elem::ONE);
    }

    #[test]
    fn products_and_inverses_in_gf4() {
        let f = Field::GF4;
        assert_eq!(f.mul(w(), w()), z());
        for x in f.elements() {
            assert_eq!(f.mul(Elem::ONE, x), x);
        }
        assert_eq!(f.inv(Elem::ONE).unwrap(), Elem::ONE);
        assert_eq!(f.inv(z()).unwrap(), w());
        assert!(matches!(f.inv(Elem::ZERO), Err(Error::DivisionByZero)));
    }

    #[test]
    fn field_axioms_exhaustive_up_to_degree_four() {
        for degree in 1..=4 {
            let f = Field::new(degree, None).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, a), Elem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn gf2_matches_integers_mod_two() {
        let f = Field::GF2;
        for a in 0..2u32 {
            for b in 0..2u32 {
                let (x, y) = (f.elem(a).unwrap(), f.elem(b).unwrap());
                assert_eq!(f.add(x, y).bits() as u32, (a + b) % 2);
                assert_eq!(f.mul(x, y).bits() as u32, (a * b) % 2);
            }
        }
    }

    #[test]
    fn every_default_modulus_is_irreducible() {
        for degree in 1..=8 {
            let f = Field::new(degree, None).unwrap();
            assert!(is_irreducible(f.modulus()));
            for a in f.elements().skip(1) {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
            }
        }
    }

    #[test]
    fn symbols_round_trip() {
        for f in [Field::GF2, Field::GF4] {
            for a in f.elements() {
                let s = f.symbol(a).unwrap();
                assert_eq!(f.parse_symbol(s).unwrap(), a);
            }
        }
        assert!(Field::GF2.parse_symbol("z").is_err());
        assert!(Field::GF4.parse_symbol("Z").is_err());
        assert!(Field::elem(Field::GF2, 2).is_err());
    }
}
