//! The five-region partition of the (j, κ) quarter-plane and the Serbia
//! reflection.

use super::FormsError;

/// Region of the (j, κ) plane for odd `j >= 1`, `κ >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Area {
    Montenegro,
    Kosovo,
    Serbia,
    BosniaHerzegovina,
    Croatia,
    /// Unreachable for odd `j >= 1` (the gaps `j = 2κ+2` and `j = 2κ+4` are
    /// even); kept so the partition is total over the declared type.
    OffGrid,
}

impl Area {
    pub fn name(self) -> &'static str {
        match self {
            Area::Montenegro => "Montenegro",
            Area::Kosovo => "Kosovo",
            Area::Serbia => "Serbia",
            Area::BosniaHerzegovina => "Bosnia & Herzegovina",
            Area::Croatia => "Croatia",
            Area::OffGrid => "off-grid",
        }
    }
}

/// Classify `(j, κ)`:
/// `j = 1` Montenegro; `3 <= j <= κ+2` Kosovo; `κ+3 <= j <= 2κ+1` Serbia;
/// `j = 2κ+3` Bosnia & Herzegovina; `j >= 2κ+5` Croatia.
pub fn classify(j: i64, kappa: i64) -> Result<Area, FormsError> {
    if j < 1 || j % 2 == 0 {
        return Err(FormsError::BadJ(j));
    }
    if kappa < 0 {
        return Err(FormsError::BadKappa(kappa));
    }
    Ok(if j == 1 {
        Area::Montenegro
    } else if j <= kappa + 2 {
        Area::Kosovo
    } else if j <= 2 * kappa + 1 {
        Area::Serbia
    } else if j == 2 * kappa + 3 {
        Area::BosniaHerzegovina
    } else if j >= 2 * kappa + 5 {
        Area::Croatia
    } else {
        Area::OffGrid
    })
}

/// Reflect a Serbia point onto its mirror `j' = 2(κ+1) − j`, which lands in
/// Montenegro or Kosovo and carries the same value for every `c`.
pub fn serbia_reflect(j: i64, kappa: i64) -> Result<i64, FormsError> {
    if classify(j, kappa)? != Area::Serbia {
        return Err(FormsError::WrongRegion { j, kappa, expected: "Serbia" });
    }
    Ok(2 * (kappa + 1) - j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        assert_eq!(classify(1, 5).unwrap(), Area::Montenegro);
        assert_eq!(classify(7, 2).unwrap(), Area::BosniaHerzegovina);
        assert_eq!(classify(3, 2).unwrap(), Area::Kosovo);
        assert_eq!(classify(5, 2).unwrap(), Area::Serbia);
        assert_eq!(classify(9, 2).unwrap(), Area::Croatia);
        assert_eq!(classify(3, 0).unwrap(), Area::BosniaHerzegovina);
        assert_eq!(classify(5, 0).unwrap(), Area::Croatia);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(classify(4, 2).is_err());
        assert!(classify(-3, 2).is_err());
        assert!(classify(3, -1).is_err());
    }

    #[test]
    fn partition_is_total_without_offgrid() {
        for kappa in 0..=40 {
            for j in (1..=100).step_by(2) {
                assert_ne!(classify(j, kappa).unwrap(), Area::OffGrid, "j={j} k={kappa}");
            }
        }
    }

    #[test]
    fn reflection() {
        for kappa in 2..=8 {
            let j = 2 * kappa + 1;
            assert_eq!(serbia_reflect(j, kappa).unwrap(), 1);
        }
        assert_eq!(serbia_reflect(7, 4).unwrap(), 3);
        assert_eq!(serbia_reflect(9, 6).unwrap(), 5);
        assert_eq!(classify(3, 4).unwrap(), Area::Kosovo);
        assert!(serbia_reflect(3, 2).is_err());
        assert!(serbia_reflect(7, 2).is_err());
    }

    #[test]
    fn reflection_lands_in_kosovo_or_montenegro() {
        for kappa in 2..=20 {
            for j in (kappa + 3..=2 * kappa + 1).filter(|j| j % 2 == 1) {
                let j2 = serbia_reflect(j, kappa).unwrap();
                let area = classify(j2, kappa).unwrap();
                assert!(
                    area == Area::Kosovo || area == Area::Montenegro,
                    "j={j} k={kappa} -> {j2} {area:?}"
                );
            }
        }
    }
}
