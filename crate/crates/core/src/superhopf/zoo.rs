//! Small Hopf superalgebras used as test data and CLI samples.

use crate::scalars::CycNumber;

use super::linalg::{unit_vector, zeros};
use super::SuperHopfPresentation;

/// Fills zero tables entry by entry, addressing the basis by label.
pub(crate) struct Builder {
    pub h: SuperHopfPresentation,
}

impl Builder {
    pub fn new(order: u64, labels: Vec<String>, parity: Vec<u8>) -> Self {
        let n = labels.len();
        let z = zeros(order, n);
        Builder {
            h: SuperHopfPresentation {
                order,
                parity,
                mult: vec![vec![z.clone(); n]; n],
                unit: z.clone(),
                comult: vec![vec![z.clone(); n]; n],
                counit: z.clone(),
                antipode: vec![z; n],
                group_likes: Vec::new(),
                labels,
            },
        }
    }

    fn named(order: u64, labels: &[&str], parity: &[u8]) -> Self {
        Self::new(order, labels.iter().map(|s| s.to_string()).collect(), parity.to_vec())
    }

    fn at(&self, label: &str) -> usize {
        self.h.index(label).expect("label in basis")
    }

    fn int(&self, c: i64) -> CycNumber {
        CycNumber::from_integer(self.h.order, c)
    }

    fn mult(mut self, a: &str, b: &str, c: &str, k: i64) -> Self {
        let (a, b, c, k) = (self.at(a), self.at(b), self.at(c), self.int(k));
        self.h.mult[a][b][c].add_assign(&k);
        self
    }

    fn comult(mut self, a: &str, b: &str, c: &str, k: i64) -> Self {
        let (a, b, c, k) = (self.at(a), self.at(b), self.at(c), self.int(k));
        self.h.comult[a][b][c].add_assign(&k);
        self
    }

    fn antipode(mut self, a: &str, b: &str, k: i64) -> Self {
        let (a, b, k) = (self.at(a), self.at(b), self.int(k));
        self.h.antipode[a][b].add_assign(&k);
        self
    }

    fn counit(mut self, a: &str, k: i64) -> Self {
        let (a, k) = (self.at(a), self.int(k));
        self.h.counit[a].add_assign(&k);
        self
    }

    fn unit(mut self, a: &str) -> Self {
        let a = self.at(a);
        self.h.unit = unit_vector(self.h.order, self.h.dim(), a);
        self
    }

    fn group_like(mut self, a: &str) -> Self {
        let a = self.at(a);
        self.h.group_likes.push(unit_vector(self.h.order, self.h.dim(), a));
        self
    }

    /// Left and right multiplication by the unit.
    fn unital(mut self, one: &str) -> Self {
        let u = self.at(one);
        for i in 0..self.h.dim() {
            let e = unit_vector(self.h.order, self.h.dim(), i);
            self.h.mult[u][i] = e.clone();
            self.h.mult[i][u] = e;
        }
        self.unit(one)
    }
}

/// The ground field.
pub fn trivial() -> SuperHopfPresentation {
    Builder::named(2, &["1"], &[0])
        .unital("1")
        .comult("1", "1", "1", 1)
        .counit("1", 1)
        .antipode("1", "1", 1)
        .group_like("1")
        .h
}

/// `𝕜(Z/2)`, purely even.
pub fn group_algebra_z2() -> SuperHopfPresentation {
    Builder::named(2, &["1", "g"], &[0, 0])
        .unital("1")
        .mult("g", "g", "1", 1)
        .comult("1", "1", "1", 1)
        .comult("g", "g", "g", 1)
        .counit("1", 1)
        .counit("g", 1)
        .antipode("1", "1", 1)
        .antipode("g", "g", 1)
        .group_like("1")
        .group_like("g")
        .h
}

/// `Λ(x)` with `x` odd and primitive.
pub fn exterior() -> SuperHopfPresentation {
    Builder::named(2, &["1", "x"], &[0, 1])
        .unital("1")
        .comult("1", "1", "1", 1)
        .comult("x", "x", "1", 1)
        .comult("x", "1", "x", 1)
        .counit("1", 1)
        .antipode("1", "1", 1)
        .antipode("x", "x", -1)
        .group_like("1")
        .h
}

/// Sweedler's algebra: `g² = 1`, `x² = 0`, `xg = −gx`, `Δx = x⊗1 + g⊗x`, purely even.
pub fn sweedler() -> SuperHopfPresentation {
    Builder::named(2, &["1", "g", "x", "gx"], &[0, 0, 0, 0])
        .unital("1")
        .mult("g", "g", "1", 1)
        .mult("g", "x", "gx", 1)
        .mult("g", "gx", "x", 1)
        .mult("x", "g", "gx", -1)
        .mult("gx", "g", "x", -1)
        .comult("1", "1", "1", 1)
        .comult("g", "g", "g", 1)
        .comult("x", "x", "1", 1)
        .comult("x", "g", "x", 1)
        .comult("gx", "gx", "g", 1)
        .comult("gx", "1", "gx", 1)
        .counit("1", 1)
        .counit("g", 1)
        .antipode("1", "1", 1)
        .antipode("g", "g", 1)
        .antipode("x", "gx", -1)
        .antipode("gx", "x", 1)
        .group_like("1")
        .group_like("g")
        .h
}

/// The super partner of Sweedler's algebra for `u = g`: same product, `x`
/// odd and primitive, `Δ(gx) = gx⊗g + g⊗gx`.
pub fn super_sweedler() -> SuperHopfPresentation {
    Builder::named(2, &["1", "g", "x", "gx"], &[0, 0, 1, 1])
        .unital("1")
        .mult("g", "g", "1", 1)
        .mult("g", "x", "gx", 1)
        .mult("g", "gx", "x", 1)
        .mult("x", "g", "gx", -1)
        .mult("gx", "g", "x", -1)
        .comult("1", "1", "1", 1)
        .comult("g", "g", "g", 1)
        .comult("x", "x", "1", 1)
        .comult("x", "1", "x", 1)
        .comult("gx", "gx", "g", 1)
        .comult("gx", "g", "gx", 1)
        .counit("1", 1)
        .counit("g", 1)
        .antipode("1", "1", 1)
        .antipode("g", "g", 1)
        .antipode("x", "x", -1)
        .antipode("gx", "gx", 1)
        .group_like("1")
        .group_like("g")
        .h
}

/// Whether `h`, read on the basis `1, g, x, −x·g` given by indices, is
/// Sweedler's algebra.
#[cfg(test)]
pub(crate) fn is_sweedler_on(h: &SuperHopfPresentation, [one, g, x, xg]: [usize; 4]) -> bool {
    let mut last = h.basis(xg);
    last[xg] = last[xg].neg();
    let cols = vec![h.basis(one), h.basis(g), h.basis(x), last];
    let s = sweedler();
    super::aeg::change_basis(h, &cols, s.labels.clone(), s.parity.clone())
        .is_some_and(|r| r.hopf.same_structure(&s))
}
