//! Stability-degree arithmetic for first-quadrant spectral sequences of FI-modules.
//!
//! Inputs are two constants `α, β ≥ 0` such that `E_2^{p,q}` has injectivity
//! degree `≤ βq` and surjectivity degree `≤ αp + βq`. The bounds below follow
//! them through the pages to `E_∞` and to the abutment. Degrees are nonnegative
//! integers, so every rational bound is rounded up and clamped at zero.

use alloc::format;
use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Injectivity and surjectivity degree bounds of an FI-module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StabilityType {
    pub inj: u64,
    pub surj: u64,
}

impl StabilityType {
    pub fn new(inj: u64, surj: u64) -> Self {
        StabilityType { inj, surj }
    }

    /// `max(inj, surj)`.
    pub fn stability_degree(&self) -> u64 {
        self.inj.max(self.surj)
    }

    /// Componentwise maximum, the bound for an extension.
    pub fn join(self, other: StabilityType) -> StabilityType {
        StabilityType {
            inj: self.inj.max(other.inj),
            surj: self.surj.max(other.surj),
        }
    }
}

impl fmt::Display for StabilityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.inj, self.surj)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundParams {
    alpha: Rational,
    beta: Rational,
}

impl BoundParams {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        if alpha.is_negative() || beta.is_negative() {
            return Err(Error::domain("alpha and beta must be nonnegative"));
        }
        Ok(BoundParams { alpha, beta })
    }

    pub fn from_integers(alpha: i64, beta: i64) -> Result<Self> {
        Self::new(
            Rational::from_integer(alpha.into()),
            Rational::from_integer(beta.into()),
        )
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    fn require_fi(&self) -> Result<()> {
        if &self.alpha * Rational::from_integer(2.into()) > self.beta {
            return Err(Error::domain(format!(
                "FI bounds need 2*alpha <= beta, got alpha={}, beta={}",
                self.alpha, self.beta
            )));
        }
        Ok(())
    }

    fn require_fisharp(&self) -> Result<()> {
        if self.alpha > self.beta {
            return Err(Error::domain(format!(
                "FI# bounds need alpha <= beta, got alpha={}, beta={}",
                self.alpha, self.beta
            )));
        }
        Ok(())
    }

    fn int(v: u32) -> Rational {
        Rational::from_integer(v.into())
    }

    /// `(αp + βq + (β-α)r + (α-2β), αp + βq)` before rounding.
    fn page_raw(&self, p: u32, q: u32, r: u32) -> (Rational, Rational) {
        let (a, b) = (&self.alpha, &self.beta);
        let surj = a * Self::int(p) + b * Self::int(q);
        let inj = &surj + (b - a) * Self::int(r) + (a - b * Self::int(2));
        (inj, surj)
    }
}

fn degree(x: &Rational) -> u64 {
    if x.is_negative() || x.is_zero() {
        0
    } else {
        x.ceil()
            .to_integer()
            .to_u64()
            .expect("degree bound fits in u64")
    }
}

fn rounded((inj, surj): (Rational, Rational)) -> StabilityType {
    StabilityType {
        inj: degree(&inj),
        surj: degree(&surj),
    }
}

/// Stability type of `E_r^{p,q}` for `r ≥ 3`.
pub fn page_stability(params: &BoundParams, p: u32, q: u32, r: u32) -> Result<StabilityType> {
    params.require_fi()?;
    if r < 3 {
        return Err(Error::domain(
            "page bounds start at r = 3; the E_2 page is an input",
        ));
    }
    Ok(rounded(params.page_raw(p, q, r)))
}

/// Stability type of `E_∞^{p, i-p} = E_{i+2}^{p, i-p}`.
pub fn einfty_stability(params: &BoundParams, i: u32, p_filt: u32) -> Result<StabilityType> {
    params.require_fi()?;
    if p_filt > i {
        return Err(Error::domain(format!(
            "filtration index {p_filt} exceeds total degree {i}"
        )));
    }
    Ok(rounded(params.page_raw(p_filt, i - p_filt, i + 2)))
}

/// Stability type of the abutment `H^i`: `((2β-α)i - α, βi)`.
pub fn abutment_stability(params: &BoundParams, i: u32) -> Result<StabilityType> {
    params.require_fi()?;
    let (a, b) = (&params.alpha, &params.beta);
    let two = Rational::from_integer(2.into());
    let i = BoundParams::int(i);
    let inj = (b * &two - a) * &i - a;
    let surj = b * &i;
    Ok(rounded((inj, surj)))
}

/// Abutment bound when the spectral sequence degenerates at `E_last_page`:
/// the join over the filtration quotients `E_{min(last_page, i+2)}^{p, i-p}`.
pub fn abutment_stability_degenerate(
    params: &BoundParams,
    i: u32,
    last_page: u32,
) -> Result<StabilityType> {
    params.require_fi()?;
    if last_page < 3 {
        return Err(Error::domain("degeneration page must be at least 3"));
    }
    let r = last_page.min(i + 2);
    Ok((0..=i)
        .map(|p| rounded(params.page_raw(p, i - p, r)))
        .fold(StabilityType::default(), StabilityType::join))
}

/// Generation degree `βi` of `H^i` when every `E_2^{p,q}` is an FI#-module
/// generated in degree `≤ αp + βq`.
pub fn fisharp_degree(params: &BoundParams, i: u32) -> Result<u64> {
    params.require_fisharp()?;
    Ok(degree(&(&params.beta * BoundParams::int(i))))
}

/// Rows of the table of specific bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Table1Example {
    ConfigSurfaceClosed,
    ConfigSurfaceBoundary,
    ConfigSurfaceOpen,
    Moduli,
    PmodSurfaceBoundary,
    PmodHighdim,
    PmodHighdimBoundary,
    Bpdiff,
}

impl Table1Example {
    pub const ALL: [Table1Example; 8] = [
        Table1Example::ConfigSurfaceClosed,
        Table1Example::ConfigSurfaceBoundary,
        Table1Example::ConfigSurfaceOpen,
        Table1Example::Moduli,
        Table1Example::PmodSurfaceBoundary,
        Table1Example::PmodHighdim,
        Table1Example::PmodHighdimBoundary,
        Table1Example::Bpdiff,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Table1Example::ConfigSurfaceClosed => "config_surface_closed",
            Table1Example::ConfigSurfaceBoundary => "config_surface_boundary",
            Table1Example::ConfigSurfaceOpen => "config_surface_open",
            Table1Example::Moduli => "moduli",
            Table1Example::PmodSurfaceBoundary => "pmod_surface_boundary",
            Table1Example::PmodHighdim => "pmod_highdim",
            Table1Example::PmodHighdimBoundary => "pmod_highdim_boundary",
            Table1Example::Bpdiff => "bpdiff",
        }
    }

    /// Weight bound as a multiple of `i`.
    fn weight_per_degree(&self) -> u64 {
        match self {
            Table1Example::PmodHighdim
            | Table1Example::PmodHighdimBoundary
            | Table1Example::Bpdiff => 1,
            _ => 2,
        }
    }

    /// Printed stable range `N` as a multiple of `i`.
    fn printed_range_per_degree(&self) -> u64 {
        match self {
            Table1Example::ConfigSurfaceClosed | Table1Example::ConfigSurfaceOpen => 5,
            Table1Example::ConfigSurfaceBoundary | Table1Example::PmodSurfaceBoundary => 4,
            Table1Example::Moduli => 6,
            Table1Example::PmodHighdim | Table1Example::Bpdiff => 3,
            Table1Example::PmodHighdimBoundary => 2,
        }
    }

    /// Stability type produced by the spectral-sequence engine for this row.
    fn stability_type(&self, i: u32) -> StabilityType {
        let surfaces = BoundParams::from_integers(1, 2).expect("valid");
        let extensions2 = BoundParams::from_integers(0, 2).expect("valid");
        let extensions1 = BoundParams::from_integers(0, 1).expect("valid");
        let st = match self {
            // E_∞ = E_3 for closed surfaces
            Table1Example::ConfigSurfaceClosed => abutment_stability_degenerate(&surfaces, i, 3),
            Table1Example::ConfigSurfaceOpen => abutment_stability(&surfaces, i),
            // FI# structure: injectivity degree 0
            Table1Example::ConfigSurfaceBoundary => {
                abutment_stability(&surfaces, i).map(|s| StabilityType::new(0, s.surj))
            }
            Table1Example::Moduli => abutment_stability(&extensions2, i),
            Table1Example::PmodSurfaceBoundary => {
                fisharp_degree(&extensions2, i).map(|d| StabilityType::new(0, d))
            }
            Table1Example::PmodHighdim | Table1Example::Bpdiff => {
                abutment_stability(&extensions1, i)
            }
            Table1Example::PmodHighdimBoundary => {
                fisharp_degree(&extensions1, i).map(|d| StabilityType::new(0, d))
            }
        };
        st.expect("fixed parameters satisfy the constraints")
    }
}

impl fmt::Display for Table1Example {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Table1Example {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Table1Example::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::Domain(String::from("unknown table row: ") + s))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub example: Table1Example,
    pub i: u32,
    /// Stable range as printed in the table.
    pub n_table: u64,
    /// `weight + stability degree` from the engine's stability type.
    pub n_derived: u64,
    pub length_bound: u64,
    pub char_degree_bound: u64,
    pub weight: u64,
    pub stability_type: StabilityType,
}

pub fn table1_row(example: Table1Example, i: u32) -> Table1Row {
    let i64_ = i as u64;
    let weight = example.weight_per_degree() * i64_;
    let stability_type = example.stability_type(i);
    Table1Row {
        example,
        i,
        n_table: example.printed_range_per_degree() * i64_,
        n_derived: weight + stability_type.stability_degree(),
        length_bound: weight + 1,
        char_degree_bound: weight,
        weight,
        stability_type,
    }
}
