//! The exact dispatcher: route `(j, κ, c)` to the region's closed form.

use crate::cf_engine::{balkan_cf_spec, eval_cf_convergent};

use super::{
    classify, kosovo_j_seeds, kosovo_kappa_level, master_c_level, montenegro_q, serbia_reflect,
    Area, FormsError, QExact,
};

/// Exact value of the family at `(j, κ, c)` for odd `j >= 1`, `κ >= 0`,
/// `c >= 1`:
///
/// - finite regions (`j >= 2κ+3`) evaluate by straightforward finite
///   summation of the terminating fraction,
/// - Serbia reflects onto its mirror point,
/// - the `j = 1` line uses its own closed form,
/// - Kosovo runs the full chain: per-`j` seeds, then the κ-level formula,
///   then the c-level master formula.
pub fn q_exact(j: i64, kappa: i64, c: i64) -> Result<QExact, FormsError> {
    if c < 1 {
        return Err(FormsError::BadC(c));
    }
    match classify(j, kappa)? {
        Area::Montenegro => montenegro_q(kappa, c),
        Area::BosniaHerzegovina | Area::Croatia => {
            let spec = balkan_cf_spec(j, kappa, c);
            let depth = spec.termination().expect("finite region terminates");
            let value = eval_cf_convergent(&spec, depth)
                .expect("no zero convergent denominators in the finite regions");
            Ok(QExact::from_rational(&value))
        }
        Area::Serbia => q_exact(serbia_reflect(j, kappa)?, kappa, c),
        Area::Kosovo => {
            let seeds = kosovo_j_seeds(j)?;
            let ab = kosovo_kappa_level(j, &seeds, kappa)?;
            Ok(master_c_level(j, kappa, &ab, c))
        }
        Area::OffGrid => Err(FormsError::WrongRegion { j, kappa, expected: "any" }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::big;
    use crate::forms::QKind;

    #[test]
    fn dispatcher_examples() {
        let q = q_exact(5, 1, 3).unwrap();
        assert_eq!(q.kind(), QKind::Rational);
        assert_eq!(q.as_rational().unwrap(), crate::exactnum::rat(3));

        let q = q_exact(1, 1, 3).unwrap();
        assert!(q.matches_triple_up_to_sign(&big(-288), &big(31), &big(-90)));

        let q = q_exact(3, 2, 3).unwrap();
        assert_eq!(q.triple(), (big(192), big(13), big(18)));
    }

    #[test]
    fn serbia_routes_through_mirror() {
        assert_eq!(q_exact(7, 4, 2).unwrap(), q_exact(3, 4, 2).unwrap());
        assert_eq!(q_exact(9, 4, 5).unwrap(), q_exact(1, 4, 5).unwrap());
    }

    #[test]
    fn montenegro_footnote_symmetry() {
        for kappa in 1..=14 {
            assert_eq!(
                q_exact(1, kappa, 1).unwrap(),
                q_exact(1, 1, kappa).unwrap(),
                "kappa={kappa}"
            );
        }
    }

    #[test]
    fn kind_by_region() {
        assert_eq!(q_exact(9, 2, 4).unwrap().kind(), QKind::Rational); // Croatia
        assert_eq!(q_exact(7, 2, 4).unwrap().kind(), QKind::Rational); // Bosnia
        assert_eq!(q_exact(3, 5, 4).unwrap().kind(), QKind::G); // Kosovo
        assert_eq!(q_exact(1, 5, 4).unwrap().kind(), QKind::G); // Montenegro
        assert_eq!(q_exact(7, 4, 4).unwrap().kind(), QKind::G); // Serbia
    }
}
