//! The class-2 nilpotent groups `Ψ(m, n) = <x, y, z | xz = zx, yz = zy, z^m = 1, [x, y] = z^n>`.
//!
//! Elements are kept in the normal form `x^a y^b z^c` with `c` reduced mod `m`.
//! Commutators follow `[g, h] = g⁻¹h⁻¹gh`; with this convention
//! `y x = x y z^{-n}` and
//!
//! ```text
//! (a, b, c) · (a', b', c') = (a + a', b + b', c + c' - n·a'·b  mod m)
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::FgAbelianGroup;
use crate::arith::gcd;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PsiParams {
    m: u64,
    n: u64,
}

impl PsiParams {
    /// `m >= 1`; `n` is stored reduced mod `m`.
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("Ψ(m, n) requires m >= 1"));
        }
        Ok(Self { m, n: n % m })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn identity(&self) -> PsiElement {
        PsiElement { a: 0, b: 0, c: 0 }
    }

    pub fn x(&self) -> PsiElement {
        PsiElement { a: 1, b: 0, c: 0 }
    }

    pub fn y(&self) -> PsiElement {
        PsiElement { a: 0, b: 1, c: 0 }
    }

    pub fn z(&self) -> PsiElement {
        self.element(0, 0, 1)
    }

    /// `x^a y^b z^c`, reducing `c` mod `m`.
    pub fn element(&self, a: i64, b: i64, c: i64) -> PsiElement {
        PsiElement {
            a,
            b,
            c: self.reduce(c as i128),
        }
    }

    fn reduce(&self, c: i128) -> u64 {
        c.rem_euclid(self.m as i128) as u64
    }

    pub fn mul(&self, g: &PsiElement, h: &PsiElement) -> PsiElement {
        let twist = self.n as i128 * h.a as i128 * g.b as i128;
        PsiElement {
            a: g.a + h.a,
            b: g.b + h.b,
            c: self.reduce(g.c as i128 + h.c as i128 - twist),
        }
    }

    pub fn inv(&self, g: &PsiElement) -> PsiElement {
        let twist = self.n as i128 * g.a as i128 * g.b as i128;
        PsiElement {
            a: -g.a,
            b: -g.b,
            c: self.reduce(-(g.c as i128) - twist),
        }
    }

    /// `g⁻¹ h⁻¹ g h`.
    pub fn commutator(&self, g: &PsiElement, h: &PsiElement) -> PsiElement {
        let gi = self.inv(g);
        let hi = self.inv(h);
        self.mul(&self.mul(&self.mul(&gi, &hi), g), h)
    }

    pub fn pow(&self, g: &PsiElement, k: u64) -> PsiElement {
        let mut acc = self.identity();
        let mut base = *g;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    pub fn order(&self, g: &PsiElement) -> ElementOrder {
        if g.a != 0 || g.b != 0 {
            ElementOrder::Infinite
        } else {
            ElementOrder::Finite(self.m / gcd(g.c, self.m))
        }
    }

    /// Whether `g` commutes with both `x` and `y` (hence with everything).
    pub fn center_contains(&self, g: &PsiElement) -> bool {
        let na = (self.n as i128 * g.a as i128).rem_euclid(self.m as i128);
        let nb = (self.n as i128 * g.b as i128).rem_euclid(self.m as i128);
        na == 0 && nb == 0
    }

    /// Reduces a word over `x, y, z` (lowercase) and their inverses (uppercase).
    pub fn eval_word(&self, word: &str) -> Result<PsiElement> {
        let mut acc = self.identity();
        for (i, ch) in word.chars().enumerate() {
            let letter = match ch {
                'x' => self.x(),
                'y' => self.y(),
                'z' => self.z(),
                'X' => self.inv(&self.x()),
                'Y' => self.inv(&self.y()),
                'Z' => self.inv(&self.z()),
                c if c.is_whitespace() => continue,
                c => {
                    return Err(Error::Parse(format!(
                        "unexpected character `{c}` at position {i} in word (alphabet: x y z X Y Z)"
                    )))
                }
            };
            acc = self.mul(&acc, &letter);
        }
        Ok(acc)
    }

    pub fn subgroup(&self, name: SubgroupName) -> NamedSubgroup {
        NamedSubgroup {
            params: *self,
            name,
        }
    }
}

impl fmt::Display for PsiParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ψ({}, {})", self.m, self.n)
    }
}

/// `x^a y^b z^c` in normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PsiElement {
    pub a: i64,
    pub b: i64,
    pub c: u64,
}

impl PsiElement {
    pub fn is_identity(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0
    }
}

impl fmt::Display for PsiElement {
    /// Nonzero exponents only, e.g. `x^1 y^-2`, `z^1`; the identity is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.a != 0 {
            parts.push(format!("x^{}", self.a));
        }
        if self.b != 0 {
            parts.push(format!("y^{}", self.b));
        }
        if self.c != 0 {
            parts.push(format!("z^{}", self.c));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ElementOrder {
    Finite(u64),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubgroupName {
    /// The whole group.
    Full,
    /// Generated by `x` and `z`.
    XZ,
    /// Generated by `z`; the torsion subgroup.
    Z,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupDescriptor {
    Presentation(PsiParams),
    Abelian(FgAbelianGroup),
}

impl fmt::Display for SubgroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupDescriptor::Presentation(p) => p.fmt(f),
            SubgroupDescriptor::Abelian(g) => g.fmt(f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NamedSubgroup {
    params: PsiParams,
    name: SubgroupName,
}

impl NamedSubgroup {
    pub fn contains(&self, g: &PsiElement) -> bool {
        match self.name {
            SubgroupName::Full => true,
            SubgroupName::XZ => g.b == 0,
            SubgroupName::Z => g.a == 0 && g.b == 0,
        }
    }

    pub fn descriptor(&self) -> SubgroupDescriptor {
        let m = self.params.m;
        match self.name {
            SubgroupName::Full => SubgroupDescriptor::Presentation(self.params),
            SubgroupName::XZ => {
                SubgroupDescriptor::Abelian(FgAbelianGroup::integral(1, &[m]).expect("m >= 1"))
            }
            SubgroupName::Z => {
                SubgroupDescriptor::Abelian(FgAbelianGroup::integral(0, &[m]).expect("m >= 1"))
            }
        }
    }
}
