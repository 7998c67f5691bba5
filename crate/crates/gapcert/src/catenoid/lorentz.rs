//! Vectors of the signature (+, +, +, -) inner-product space that houses the
//! hyperboloid model, and their triple cross product.

use std::ops::{Add, Mul, Neg, Sub};

/// A vector of `R^4_1` with inner product
/// `<v, w> = v1 w1 + v2 w2 + v3 w3 - v4 w4`.
///
/// Points of the hyperboloid satisfy `<y, y> = -1` with `y4 >= 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct LorentzVec4 {
    pub y1: f64,
    pub y2: f64,
    pub y3: f64,
    pub y4: f64,
}

impl LorentzVec4 {
    pub const E1: LorentzVec4 = LorentzVec4::new(1.0, 0.0, 0.0, 0.0);
    pub const E2: LorentzVec4 = LorentzVec4::new(0.0, 1.0, 0.0, 0.0);
    pub const E3: LorentzVec4 = LorentzVec4::new(0.0, 0.0, 1.0, 0.0);
    pub const E4: LorentzVec4 = LorentzVec4::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(y1: f64, y2: f64, y3: f64, y4: f64) -> Self {
        LorentzVec4 { y1, y2, y3, y4 }
    }

    pub const fn from_array(v: [f64; 4]) -> Self {
        LorentzVec4::new(v[0], v[1], v[2], v[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.y1, self.y2, self.y3, self.y4]
    }

    /// Lorentz inner product `<v, w>_1`.
    pub fn dot(self, other: LorentzVec4) -> f64 {
        self.y1 * other.y1 + self.y2 * other.y2 + self.y3 * other.y3 - self.y4 * other.y4
    }

    /// Euclidean inner product of the coordinates (used by the round-sphere
    /// model, which lives in the same coordinate space).
    pub fn dot_euclidean(self, other: LorentzVec4) -> f64 {
        self.y1 * other.y1 + self.y2 * other.y2 + self.y3 * other.y3 + self.y4 * other.y4
    }

    pub fn scale(self, k: f64) -> LorentzVec4 {
        LorentzVec4::new(k * self.y1, k * self.y2, k * self.y3, k * self.y4)
    }
}

impl Add for LorentzVec4 {
    type Output = LorentzVec4;
    fn add(self, o: LorentzVec4) -> LorentzVec4 {
        LorentzVec4::new(
            self.y1 + o.y1,
            self.y2 + o.y2,
            self.y3 + o.y3,
            self.y4 + o.y4,
        )
    }
}

impl Sub for LorentzVec4 {
    type Output = LorentzVec4;
    fn sub(self, o: LorentzVec4) -> LorentzVec4 {
        LorentzVec4::new(
            self.y1 - o.y1,
            self.y2 - o.y2,
            self.y3 - o.y3,
            self.y4 - o.y4,
        )
    }
}

impl Mul<f64> for LorentzVec4 {
    type Output = LorentzVec4;
    fn mul(self, k: f64) -> LorentzVec4 {
        self.scale(k)
    }
}

impl Neg for LorentzVec4 {
    type Output = LorentzVec4;
    fn neg(self) -> LorentzVec4 {
        self.scale(-1.0)
    }
}

fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// The Lorentz cross product `v1 ∧ v2 ∧ v3`: the unique vector with
/// `<v1 ∧ v2 ∧ v3, v>_1 = det(v1, v2, v3, v)` for every `v`, computed by
/// cofactor expansion with the metric sign applied to the fourth slot.
pub fn lorentz_cross(v1: LorentzVec4, v2: LorentzVec4, v3: LorentzVec4) -> LorentzVec4 {
    let a = v1.to_array();
    let b = v2.to_array();
    let c = v3.to_array();
    let minor = |skip: usize| {
        let rows: Vec<usize> = (0..4).filter(|&r| r != skip).collect();
        det3([
            [a[rows[0]], b[rows[0]], c[rows[0]]],
            [a[rows[1]], b[rows[1]], c[rows[1]]],
            [a[rows[2]], b[rows[2]], c[rows[2]]],
        ])
    };
    // Cofactor of slot j in det(v1, v2, v3, e_j), then metric signs.
    let c1 = -minor(0);
    let c2 = minor(1);
    let c3 = -minor(2);
    let c4 = minor(3);
    LorentzVec4::new(c1, c2, c3, -c4)
}

/// Euclidean 4d triple cross: `<cross, v> = det(v1, v2, v3, v)` with the
/// all-plus inner product. Serves the round-sphere model.
pub fn euclidean_cross4(v1: LorentzVec4, v2: LorentzVec4, v3: LorentzVec4) -> LorentzVec4 {
    let w = lorentz_cross(v1, v2, v3);
    LorentzVec4::new(w.y1, w.y2, w.y3, -w.y4)
}
