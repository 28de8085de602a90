//! Orbital order polynomials and their verification: the quotient-poset
//! formula, a direct orbit-counting oracle, even maps, and the reciprocity
//! identities relating the two polynomial families.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::label::LabelMap;
use crate::permgroup::{act_on_map, stabilizer, PermGroup, Permutation};
use crate::poset::{
    count_homs, enumerate_homs, order_polynomial, quotient_poset, require_order_action, Poset,
};
use crate::polynomial::Polynomial;
use crate::{Rational, RationalPolynomial};

/// One summand of the group-averaged formula: the quotient poset of a single
/// group element and its order polynomial.
#[derive(Debug, Clone)]
pub struct QuotientSummary {
    pub element: Permutation,
    /// Number of cycles, i.e. the quotient poset's size.
    pub cycle_count: usize,
    /// Order polynomial of the quotient poset (strictness as requested).
    pub polynomial: RationalPolynomial,
}

/// One evaluation point of the result, carrying the formula value and, in
/// verify mode, the independently enumerated orbit count.
#[derive(Debug, Clone)]
pub struct ValueRow {
    pub n: u32,
    pub formula: Rational,
    pub oracle: Option<u64>,
}

/// An orbital polynomial with its provenance: per-element quotient summaries
/// and a value table over the interpolation nodes.
#[derive(Debug, Clone)]
pub struct OrbitalResult {
    pub polynomial: RationalPolynomial,
    pub per_group_element: Vec<QuotientSummary>,
    pub value_table: Vec<ValueRow>,
}

pub(crate) fn check_budget(size: usize, n: u32, budget: u64) -> Result<()> {
    let estimate = (n as u128).pow(size as u32);
    if estimate > budget as u128 {
        return Err(Error::BudgetExceeded { estimate, budget });
    }
    Ok(())
}

fn canonical_form(group: &PermGroup, map: &LabelMap) -> LabelMap {
    group
        .elements()
        .iter()
        .map(|g| act_on_map(g, map))
        .min()
        .expect("a group always contains the identity")
}

/// Number of distinct canonical forms among `maps` under the induced action.
pub(crate) fn count_orbits(group: &PermGroup, maps: &[LabelMap]) -> u64 {
    let canon: BTreeSet<LabelMap> = maps.iter().map(|m| canonical_form(group, m)).collect();
    canon.len() as u64
}

/// The group average of quotient-poset order polynomials. With `verify` set,
/// every value-table entry is checked against the enumeration oracle and a
/// disagreement is an error. The result's degree is asserted to equal the
/// poset size.
pub fn orbital_order_polynomial(
    poset: &Poset,
    group: &PermGroup,
    strict: bool,
    verify: bool,
    budget: u64,
) -> Result<OrbitalResult> {
    if group.degree() != poset.size() {
        return Err(Error::SizeMismatch {
            left: poset.size(),
            right: group.degree(),
        });
    }
    require_order_action(poset, group)?;

    let weight = Rational::new(BigInt::one(), BigInt::from(group.order()));
    let mut per_group_element = Vec::with_capacity(group.order());
    let mut terms = Vec::with_capacity(group.order());
    for g in group.elements() {
        let quotient = quotient_poset(poset, g)?;
        let polynomial = order_polynomial(&quotient.poset, strict)?;
        per_group_element.push(QuotientSummary {
            element: g.clone(),
            cycle_count: quotient.poset.size(),
            polynomial: polynomial.clone(),
        });
        terms.push((weight.clone(), polynomial));
    }
    let polynomial = Polynomial::scale_add(&terms);
    if polynomial.degree() != Some(poset.size()) {
        return Err(Error::DegreeMismatch {
            expected: poset.size(),
            found: polynomial
                .degree()
                .map(|d| d.to_string())
                .unwrap_or_else(|| "zero polynomial".into()),
        });
    }

    let mut value_table = Vec::new();
    for n in 1..=poset.size() as u32 + 1 {
        let formula = polynomial.evaluate(n as i64);
        let oracle = if verify {
            let count = orbit_count_oracle(poset, group, n, strict, budget)?;
            if formula != Rational::from_integer(BigInt::from(count)) {
                return Err(Error::RouteMismatch {
                    n: n as i64,
                    formula: formula.to_string(),
                    oracle: count.to_string(),
                });
            }
            Some(count)
        } else {
            None
        };
        value_table.push(ValueRow { n, formula, oracle });
    }

    Ok(OrbitalResult {
        polynomial,
        per_group_element,
        value_table,
    })
}

/// Orbit count of (strictly) order preserving maps by full enumeration and
/// canonicalization. Independent of the quotient-poset formula: no Burnside
/// averaging, no interpolation.
pub fn orbit_count_oracle(
    poset: &Poset,
    group: &PermGroup,
    n: u32,
    strict: bool,
    budget: u64,
) -> Result<u64> {
    if group.degree() != poset.size() {
        return Err(Error::SizeMismatch {
            left: poset.size(),
            right: group.degree(),
        });
    }
    require_order_action(poset, group)?;
    check_budget(poset.size(), n, budget)?;
    let maps = enumerate_homs(poset, n, strict);
    Ok(count_orbits(group, &maps))
}

/// Number of maps fixed by `g`, computed through the quotient poset. A map
/// is `g`-fixed exactly when it is constant on cycles and descends to the
/// quotient, so this equals the quotient's hom count.
pub fn fixed_hom_count(poset: &Poset, g: &Permutation, n: u32, strict: bool) -> Result<u64> {
    let quotient = quotient_poset(poset, g)?;
    Ok(count_homs(&quotient.poset, n, strict))
}

/// A map is even when every element of its stabilizer has sign +1.
pub fn is_even_map(map: &LabelMap, group: &PermGroup) -> bool {
    stabilizer(group, map).elements().iter().all(|g| g.sign() == 1)
}

fn even_orbit_count(group: &PermGroup, maps: &[LabelMap]) -> u64 {
    let even: Vec<LabelMap> = maps
        .iter()
        .filter(|m| is_even_map(m, group))
        .cloned()
        .collect();
    count_orbits(group, &even)
}

/// One evaluation point of the reciprocity check. The weak identity compares
/// the weak polynomial at −n with the orbit count of even strict maps; the
/// strict identity compares the strict polynomial at −n with the orbit count
/// of even weak maps. Both right sides carry the sign (−1)^{|P|}.
#[derive(Debug, Clone)]
pub struct ReciprocityRow {
    pub n: u32,
    pub weak_at_negated: Rational,
    pub even_strict_orbits: u64,
    pub weak_identity_holds: bool,
    pub strict_at_negated: Rational,
    pub even_weak_orbits: u64,
    pub strict_identity_holds: bool,
}

#[derive(Debug, Clone)]
pub struct ReciprocityReport {
    pub poset_size: usize,
    pub sign: i64,
    pub weak_polynomial: RationalPolynomial,
    pub strict_polynomial: RationalPolynomial,
    pub rows: Vec<ReciprocityRow>,
    pub all_hold: bool,
}

/// Checks both reciprocity identities for n = 1,…,n_max. Left sides come
/// from the group-averaged polynomials; right sides from enumeration,
/// even-map filtering, and orbit canonicalization.
pub fn verify_reciprocity(
    poset: &Poset,
    group: &PermGroup,
    n_max: u32,
    budget: u64,
) -> Result<ReciprocityReport> {
    let weak = orbital_order_polynomial(poset, group, false, false, budget)?;
    let strict = orbital_order_polynomial(poset, group, true, false, budget)?;
    let sign: i64 = if poset.size().is_multiple_of(2) { 1 } else { -1 };

    let mut rows = Vec::new();
    let mut all_hold = true;
    for n in 1..=n_max {
        check_budget(poset.size(), n, budget)?;
        let even_strict_orbits = even_orbit_count(group, &enumerate_homs(poset, n, true));
        let even_weak_orbits = even_orbit_count(group, &enumerate_homs(poset, n, false));
        let weak_at_negated = weak.polynomial.evaluate(-(n as i64));
        let strict_at_negated = strict.polynomial.evaluate(-(n as i64));
        let signed = |count: u64| Rational::from_integer(BigInt::from(sign) * BigInt::from(count));
        let weak_identity_holds = weak_at_negated == signed(even_strict_orbits);
        let strict_identity_holds = strict_at_negated == signed(even_weak_orbits);
        all_hold &= weak_identity_holds && strict_identity_holds;
        rows.push(ReciprocityRow {
            n,
            weak_at_negated,
            even_strict_orbits,
            weak_identity_holds,
            strict_at_negated,
            even_weak_orbits,
            strict_identity_holds,
        });
    }

    Ok(ReciprocityReport {
        poset_size: poset.size(),
        sign,
        weak_polynomial: weak.polynomial,
        strict_polynomial: strict.polynomial,
        rows,
        all_hold,
    })
}
