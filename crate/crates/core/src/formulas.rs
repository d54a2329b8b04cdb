//! Closed-form evaluators for every count in the family, and the harness
//! comparing them against exhaustive enumeration.
//!
//! All closed forms are evaluated in 128-bit integers so they stay exact far
//! beyond the range the enumeration side can reach.

use std::fmt;

use rayon::prelude::*;

use crate::family::{FSGraph, FamilyError};
use crate::jaeger;
use crate::matchings::{self, MatchingType};
use crate::two_factor::{complement_two_factor, is_hamiltonian};

fn check_domain(j: u8, k: usize) -> Result<(), FamilyError> {
    if !(1..=3).contains(&j) {
        return Err(FamilyError::InvalidJ(j));
    }
    if k < 2 {
        return Err(FamilyError::InvalidK(k));
    }
    Ok(())
}

fn pow2(k: usize) -> i128 {
    2i128.pow(k as u32)
}

fn pow3(k: usize) -> i128 {
    3i128.pow(k as u32)
}

fn sign(k: usize) -> i128 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Total number of perfect matchings of FS(j,k).
pub fn mu_closed(j: u8, k: usize) -> Result<u128, FamilyError> {
    check_domain(j, k)?;
    let value = if k % 2 == 1 {
        match j {
            1 => pow2(k) + 1,
            2 => pow2(k),
            _ => pow2(k) - 2,
        }
    } else {
        let base = 2 * pow3(k / 2) + pow2(k);
        match j {
            1 => base - 1,
            2 => base,
            _ => base + 2,
        }
    };
    Ok(value as u128)
}

/// Number of type-1 perfect matchings of FS(j,k).
pub fn mu1_closed(j: u8, k: usize) -> Result<u128, FamilyError> {
    check_domain(j, k)?;
    let value = match j {
        1 => pow2(k) - sign(k),
        2 => pow2(k),
        _ => pow2(k) + 2 * sign(k),
    };
    Ok(value as u128)
}

/// Number of type-2 perfect matchings of FS(j,k): zero for odd k,
/// `2 * 3^(k/2)` for even k, independently of j.
pub fn mu2_closed(j: u8, k: usize) -> Result<u128, FamilyError> {
    check_domain(j, k)?;
    Ok(if k % 2 == 1 {
        0
    } else {
        (2 * pow3(k / 2)) as u128
    })
}

/// Number of type-2 perfect matchings of FS(j,2p) complementary to a
/// hamiltonian cycle.
pub fn mu2prime_closed(j: u8, p: usize) -> Result<u128, FamilyError> {
    check_domain(j, 2 * p)?;
    if p < 2 {
        return Err(FamilyError::InvalidK(2 * p));
    }
    let value = match j {
        1 => pow2(p + 1) - 2 * sign(p),
        2 => pow2(p + 1),
        _ => pow2(p + 1) + 4 * sign(p),
    };
    Ok(value as u128)
}

/// Number of Jaeger matchings of FS(j,k): 3 for the j = 1 members, 6 for the
/// j = 3 members, 0 outside the Jaeger range.
pub fn jaeger_count_closed(j: u8, k: usize) -> Result<u128, FamilyError> {
    check_domain(j, k)?;
    Ok(if !jaeger::jaeger_family_predicate(j, k) {
        0
    } else if j == 1 {
        3
    } else {
        6
    })
}

/// The quantity a [`CountCheck`] row compares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    Mu,
    Mu1,
    Mu2Zero,
    Mu2One,
    Mu2Prime,
    Jaeger,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Quantity::Mu => "mu",
            Quantity::Mu1 => "mu1",
            Quantity::Mu2Zero => "mu2.0",
            Quantity::Mu2One => "mu2.1",
            Quantity::Mu2Prime => "mu2prime",
            Quantity::Jaeger => "jaeger",
        };
        write!(f, "{name}")
    }
}

/// One enumerated-versus-closed-form comparison.
#[derive(Clone, Debug)]
pub struct CountCheck {
    pub j: u8,
    pub k: usize,
    pub quantity: Quantity,
    pub enumerated: u128,
    pub closed_form: u128,
}

impl CountCheck {
    pub fn pass(&self) -> bool {
        self.enumerated == self.closed_form
    }
}

/// The full verification table over a parameter range.
#[derive(Clone, Debug)]
pub struct CountReport {
    pub checks: Vec<CountCheck>,
}

impl CountReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(CountCheck::pass)
    }

    pub fn failures(&self) -> Vec<&CountCheck> {
        self.checks.iter().filter(|c| !c.pass()).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("j,k,quantity,enumerated,closed_form,pass\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                c.j,
                c.k,
                c.quantity,
                c.enumerated,
                c.closed_form,
                c.pass()
            ));
        }
        out
    }
}

impl fmt::Display for CountReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<2} {:<3} {:<9} {:>12} {:>12} {}",
            "j", "k", "quantity", "enumerated", "closed", "pass"
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<2} {:<3} {:<9} {:>12} {:>12} {}",
                c.j,
                c.k,
                c.quantity,
                c.enumerated,
                c.closed_form,
                if c.pass() { "ok" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

fn verify_cell(j: u8, k: usize) -> Vec<CountCheck> {
    let g = FSGraph::build(j, k).expect("cell parameters are in range");
    let ms = matchings::enumerate_perfect_matchings(&g);

    let mut mu1 = 0u128;
    let mut mu2_0 = 0u128;
    let mut mu2_1 = 0u128;
    let mut mu2prime = 0u128;
    for m in &ms {
        match m.matching_type() {
            MatchingType::One => mu1 += 1,
            MatchingType::TwoZero => mu2_0 += 1,
            MatchingType::TwoOne => mu2_1 += 1,
        }
        if m.matching_type() != MatchingType::One && is_hamiltonian(&complement_two_factor(m)) {
            mu2prime += 1;
        }
    }
    let jaeger_count = ms
        .iter()
        .filter(|m| jaeger::jaeger_decompose(m).is_some())
        .count() as u128;

    let mut checks = vec![
        CountCheck {
            j,
            k,
            quantity: Quantity::Mu,
            enumerated: ms.len() as u128,
            closed_form: mu_closed(j, k).expect("in range"),
        },
        CountCheck {
            j,
            k,
            quantity: Quantity::Mu1,
            enumerated: mu1,
            closed_form: mu1_closed(j, k).expect("in range"),
        },
        CountCheck {
            j,
            k,
            quantity: Quantity::Mu2Zero,
            enumerated: mu2_0,
            closed_form: mu2_closed(j, k).expect("in range") / 2,
        },
        CountCheck {
            j,
            k,
            quantity: Quantity::Mu2One,
            enumerated: mu2_1,
            closed_form: mu2_closed(j, k).expect("in range") / 2,
        },
    ];
    if k % 2 == 0 && k >= 4 {
        checks.push(CountCheck {
            j,
            k,
            quantity: Quantity::Mu2Prime,
            enumerated: mu2prime,
            closed_form: mu2prime_closed(j, k / 2).expect("in range"),
        });
    }
    checks.push(CountCheck {
        j,
        k,
        quantity: Quantity::Jaeger,
        enumerated: jaeger_count,
        closed_form: jaeger_count_closed(j, k).expect("in range"),
    });
    checks
}

/// Compares every closed form against enumeration for all j and
/// `2 <= k <= k_max`. Cells run in parallel; the report is ordered by (j,k).
pub fn verify_all(k_max: usize) -> CountReport {
    let cells: Vec<(u8, usize)> = (1..=3u8)
        .flat_map(|j| (2..=k_max).map(move |k| (j, k)))
        .collect();
    let checks = cells
        .par_iter()
        .map(|&(j, k)| verify_cell(j, k))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    CountReport { checks }
}
