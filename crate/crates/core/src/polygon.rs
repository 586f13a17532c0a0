//! φ-adic developments, principal polygons and φ-indices.
//!
//! `p` does not divide the index of `f` exactly when every irreducible
//! factor φ of `f mod p` has φ-index zero, i.e. no lattice point with both
//! coordinates positive lies on or under its principal polygon.

use num_bigint::BigInt;

use crate::arith::{is_prime, valuation_or_inf};
use crate::error::{Error, Result};
use crate::poly::{factor_mod_p, reduce_mod, IntPolynomial, ModPolynomial};

/// `f = sum coefficients[i] * phi^i`, each coefficient of degree below `deg phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiDevelopment {
    pub phi: IntPolynomial,
    pub coefficients: Vec<IntPolynomial>,
}

impl PhiDevelopment {
    /// Evaluates the development back into a polynomial.
    pub fn reconstruct(&self) -> IntPolynomial {
        self.coefficients
            .iter()
            .rev()
            .fold(IntPolynomial::zero(), |acc, a| &(&acc * &self.phi) + a)
    }

    pub fn valuation_points(&self, p: &BigInt) -> Vec<ValuationPoint> {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, a)| ValuationPoint {
                abscissa: i,
                ordinate: poly_valuation(a, p),
            })
            .collect()
    }
}

/// `(i, v_p(a_i))`; `None` stands for `+inf` when `a_i = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValuationPoint {
    pub abscissa: usize,
    pub ordinate: Option<u32>,
}

impl ValuationPoint {
    pub fn finite(abscissa: usize, ordinate: u32) -> Self {
        ValuationPoint {
            abscissa,
            ordinate: Some(ordinate),
        }
    }
}

/// Negative-slope part of a lower convex hull, as its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalPolygon {
    vertices: Vec<(usize, u32)>,
}

impl PrincipalPolygon {
    /// Builds the polygon from valuation points; infinite points are ignored.
    ///
    /// The hull starts at the point of abscissa 0 and stops at the first
    /// point of minimal ordinate.
    pub fn from_points(points: &[ValuationPoint]) -> Result<Self> {
        let mut finite: Vec<(usize, u32)> = points
            .iter()
            .filter_map(|pt| pt.ordinate.map(|v| (pt.abscissa, v)))
            .collect();
        finite.sort_unstable();
        match finite.first() {
            None => return Err(Error::PhiPowerDivides),
            Some(&(0, _)) => {}
            Some(_) => return Err(Error::PhiPowerDivides),
        }
        let vmin = finite.iter().map(|&(_, v)| v).min().unwrap();
        let end = finite.iter().position(|&(_, v)| v == vmin).unwrap();
        let mut hull: Vec<(usize, u32)> = Vec::new();
        for &pt in &finite[..=end] {
            while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], pt) <= 0 {
                hull.pop();
            }
            hull.push(pt);
        }
        Ok(PrincipalPolygon { vertices: hull })
    }

    pub fn vertices(&self) -> &[(usize, u32)] {
        &self.vertices
    }

    /// Length of the polygon along the abscissa.
    pub fn length(&self) -> usize {
        self.vertices.last().map_or(0, |v| v.0)
    }

    /// Slopes of the sides as `(rise, run)` with `run > 0`.
    pub fn slopes(&self) -> Vec<(i64, i64)> {
        self.vertices
            .windows(2)
            .map(|w| (w[1].1 as i64 - w[0].1 as i64, (w[1].0 - w[0].0) as i64))
            .collect()
    }

    /// Checks convexity and that every slope is negative.
    pub fn is_valid(&self) -> bool {
        let slopes = self.slopes();
        slopes.iter().all(|&(rise, _)| rise < 0)
            && slopes
                .windows(2)
                .all(|w| w[0].0 * w[1].1 < w[1].0 * w[0].1)
    }

    /// `floor` of the polygon's height at abscissa `x`, for `x` within its length.
    fn floor_height(&self, x: usize) -> i64 {
        let side = self
            .vertices
            .windows(2)
            .find(|w| w[0].0 <= x && x <= w[1].0)
            .expect("abscissa inside polygon");
        let (x1, y1) = (side[0].0 as i64, side[0].1 as i64);
        let (x2, y2) = (side[1].0 as i64, side[1].1 as i64);
        let num = y1 * (x2 - x1) + (y2 - y1) * (x as i64 - x1);
        num_integer::Integer::div_floor(&num, &(x2 - x1))
    }
}

// > 0 for a counter-clockwise turn o -> a -> b
fn cross(o: (usize, u32), a: (usize, u32), b: (usize, u32)) -> i64 {
    let (ox, oy) = (o.0 as i64, o.1 as i64);
    (a.0 as i64 - ox) * (b.1 as i64 - oy) - (a.1 as i64 - oy) * (b.0 as i64 - ox)
}

/// Minimum p-adic valuation of the coefficients; `None` for the zero polynomial.
pub fn poly_valuation(a: &IntPolynomial, p: &BigInt) -> Option<u32> {
    a.coeffs().iter().filter_map(|c| valuation_or_inf(c, p)).min()
}

pub fn phi_adic_development(f: &IntPolynomial, phi: &IntPolynomial) -> Result<PhiDevelopment> {
    let dphi = phi.degree().ok_or(Error::ZeroPolynomial)?;
    if !phi.is_monic() {
        return Err(Error::NotMonic);
    }
    if dphi == 0 {
        return Err(Error::DegreeTooSmall {
            required: 1,
            actual: 0,
        });
    }
    let mut coefficients = Vec::new();
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (q, r) = rest.divrem(phi)?;
        coefficients.push(r);
        rest = q;
    }
    Ok(PhiDevelopment {
        phi: phi.clone(),
        coefficients,
    })
}

pub fn principal_polygon(dev: &PhiDevelopment, p: &BigInt) -> Result<PrincipalPolygon> {
    PrincipalPolygon::from_points(&dev.valuation_points(p))
}

/// Number of lattice points `(m, n)`, `m, n > 0`, on or under the polygon.
pub fn phi_index(polygon: &PrincipalPolygon) -> u64 {
    (1..=polygon.length())
        .map(|x| polygon.floor_height(x).max(0) as u64)
        .sum()
}

/// φ-index of each repeated irreducible factor of `f mod p`.
#[derive(Debug, Clone)]
pub struct FactorIndex {
    pub phi: ModPolynomial,
    pub exponent: u32,
    pub polygon: PrincipalPolygon,
    pub index: u64,
}

pub fn ore_factor_indices(f: &IntPolynomial, p: &BigInt) -> Result<Vec<FactorIndex>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall {
            required: 2,
            actual: n,
        });
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let fp = reduce_mod(f, p)?;
    let fl = factor_mod_p(&fp, fp.modulus())?;
    let mut out = Vec::new();
    for (phi, e) in fl.factors {
        if e < 2 {
            continue;
        }
        let dev = phi_adic_development(f, &phi.lift())?;
        let polygon = principal_polygon(&dev, p)?;
        let index = phi_index(&polygon);
        out.push(FactorIndex {
            phi,
            exponent: e,
            polygon,
            index,
        });
    }
    Ok(out)
}

/// Whether `p` divides the index `[O_K : Z[θ]]`, by φ-indices of `f mod p`.
pub fn ore_p_divides_index(f: &IntPolynomial, p: &BigInt) -> Result<bool> {
    Ok(ore_factor_indices(f, p)?.iter().any(|fi| fi.index > 0))
}
