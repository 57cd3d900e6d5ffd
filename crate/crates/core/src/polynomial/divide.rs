use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::Zero;

use super::{Monomial, SparsePoly};
use crate::error::{Error, Result};

fn sub_term(rem: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match rem.entry(m) {
        Entry::Vacant(v) => {
            v.insert(-c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() -= c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl SparsePoly {
    /// Exact quotient `self / divisor` by graded-lex long division.
    ///
    /// Fails with [`Error::NotDivisible`] as soon as a leading term of the
    /// running remainder is not a multiple of the divisor's leading term.
    pub fn exact_div(&self, divisor: &SparsePoly) -> Result<SparsePoly> {
        self.check_arity(divisor.nvars)?;
        let (lead_m, lead_c) = divisor
            .leading_term()
            .ok_or_else(|| Error::InvalidParameter("division by the zero polynomial".into()))?;

        let mut rem = self.terms.clone();
        let mut quotient = BTreeMap::new();
        while let Some((m, c)) = rem.last_key_value() {
            let qm = m.checked_div(lead_m).ok_or(Error::NotDivisible)?;
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (dm, dc) in &divisor.terms {
                sub_term(&mut rem, qm.mul(dm), &qc * dc);
            }
            quotient.insert(qm, qc);
        }
        Ok(SparsePoly::from_map(self.nvars, quotient))
    }

    /// Exact square root with positive leading coefficient.
    ///
    /// The root is built one term at a time in decreasing graded-lex order:
    /// the leading term of `self` fixes the leading term `r0` of the root, and
    /// each subsequent term is the leading term of the remainder divided by
    /// `2 r0`.
    pub fn exact_sqrt(&self) -> Result<SparsePoly> {
        let Some((lead_m, lead_c)) = self.leading_term() else {
            return Ok(SparsePoly::zero(self.nvars));
        };
        if lead_c.sign() != Sign::Plus || lead_m.exponents().iter().any(|e| e % 2 != 0) {
            return Err(Error::NotAPerfectSquare);
        }
        let root_c = lead_c.sqrt();
        if &(&root_c * &root_c) != lead_c {
            return Err(Error::NotAPerfectSquare);
        }
        let root_m = Monomial(lead_m.exponents().iter().map(|e| e / 2).collect());
        // every term of the root has degree at least half the lowest degree of self
        let min_root_degree = self.low_degree().unwrap_or(0).div_ceil(2);
        let two_root_c = &root_c * 2;

        let mut rem = self.terms.clone();
        sub_term(&mut rem, root_m.mul(&root_m), &root_c * &root_c);
        let mut root: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        root.insert(root_m.clone(), root_c);

        while let Some((m, c)) = rem.last_key_value() {
            let tm = m.checked_div(&root_m).ok_or(Error::NotAPerfectSquare)?;
            if tm.degree() < min_root_degree {
                return Err(Error::NotAPerfectSquare);
            }
            let (tc, r) = c.div_rem(&two_root_c);
            if !r.is_zero() {
                return Err(Error::NotAPerfectSquare);
            }
            let twice_tc = &tc * 2;
            for (rm, rc) in &root {
                sub_term(&mut rem, rm.mul(&tm), rc * &twice_tc);
            }
            sub_term(&mut rem, tm.mul(&tm), &tc * &tc);
            root.insert(tm, tc);
        }
        Ok(SparsePoly::from_map(self.nvars, root))
    }
}
