//! Closed-form expressions for the irregularity measures of each family,
//! evaluated exactly, plus the errata ledger for the printed forms that
//! contradict first principles.
//!
//! Graph-derived values are the ground truth here; the printed theorem forms
//! are claims under test. Where a printed form disagrees with the counts'
//! own arithmetic (or with brute force on small instances), the corrected
//! form is returned and the report carries an erratum describing both, so
//! reviews can see both numbers instead of a silent fix.

use alloc::vec;
use alloc::vec::Vec;

use crate::generators::{Family, FamilySpec, GenerateError};
use crate::Rational;

/// A printed closed form that does not withstand recomputation, with its
/// replacement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ErrataEntry {
    pub family: Family,
    /// Which reported quantity the entry concerns.
    pub field: &'static str,
    pub printed_form: &'static str,
    pub corrected_form: &'static str,
    pub justification: &'static str,
}

static ERRATA: [ErrataEntry; 7] = [
    ErrataEntry {
        family: Family::Tuc4c8s,
        field: "cs",
        printed_form: "CS = lambda1 - 3 - 1/q",
        corrected_form: "CS = lambda1 - 3 + 1/q",
        justification: "the stated counts n = 4pq, m = 2p(3q-1) give mean degree \
                        2m/n = (3q-1)/q = 3 - 1/q, so the subtracted constant must be 3 - 1/q; \
                        graph-computed means confirm (e.g. p=q=4 gives 2.75)",
    },
    ErrataEntry {
        family: Family::Tuc4c8r,
        field: "cs",
        printed_form: "CS = lambda1 - 3 - 1/(2q)",
        corrected_form: "CS = lambda1 - 3 + 1/(2q)",
        justification: "the stated counts n = 4pq, m = p(6q-1) give mean degree \
                        2m/n = (6q-1)/(2q) = 3 - 1/(2q), so the subtracted constant must be \
                        3 - 1/(2q)",
    },
    ErrataEntry {
        family: Family::Dendrimer,
        field: "irr_t",
        printed_form: "irr_t = k^2 (k-1)^d ((k-1)^(d-1) - 2) / (2(k-2))",
        corrected_form: "irr_t = k (k-1)^d (k(k-1)^(d-1) - 2) / (k-2)",
        justification: "brute-force pairwise sums contradict the printed form, which yields -9 \
                        for T_{3,1} (actual 6) and 0 for T_{3,2} (actual 48); the corrected form \
                        is |V1| * |V2| * (k-1) with |V1| leaves and |V2| internal vertices",
    },
    ErrataEntry {
        family: Family::Tuc4c8s,
        field: "irr_t",
        printed_form: "irr_t = 8 p^2 (q-1)",
        corrected_form: "irr_t = 16 p^2 (q-1)",
        justification: "with |V1| = 4p vertices of degree 2 and |V2| = 4p(q-1) of degree 3, the \
                        unordered pairwise sum is |V1|*|V2| = 16p^2(q-1); the printed value \
                        halves a sum that already counted each pair once (brute force on \
                        p = q = 2 gives 64, printed form 32)",
    },
    ErrataEntry {
        family: Family::Tuc4c8r,
        field: "irr_t",
        printed_form: "irr_t = 2 p^2 (2q-1)",
        corrected_form: "irr_t = 4 p^2 (2q-1)",
        justification: "|V1| = 2p, |V2| = 2p(2q-1) give an unordered pairwise sum of \
                        4p^2(2q-1); the printed value keeps a spurious factor 1/2",
    },
    ErrataEntry {
        family: Family::Tuc4,
        field: "irr_t",
        printed_form: "irr_t = q^2 (p-2)",
        corrected_form: "irr_t = 2 q^2 (p-2)",
        justification: "|V1| = 2q, |V2| = (p-2)q give an unordered pairwise sum of 2q^2(p-2); \
                        the printed value keeps a spurious factor 1/2",
    },
    ErrataEntry {
        family: Family::Tuvc6,
        field: "irr_t",
        printed_form: "irr_t = 4 p^2 (q-2)",
        corrected_form: "irr_t = 8 p^2 (q-2)",
        justification: "|V1| = 4p, |V2| = 2p(q-2) give an unordered pairwise sum of 8p^2(q-2); \
                        the printed value keeps a spurious factor 1/2",
    },
];

/// The static ledger of printed closed forms that contradict recomputation
/// from the families' own vertex/edge counts.
///
/// The total-irregularity convention is pinned by the definition
/// `irr_t = ½ Σ_{ordered pairs} |d(u) − d(v)|`, i.e. the plain sum over
/// unordered pairs. The zig-zag tube, circumcoronene and Mycielski forms
/// follow that convention; the four tube entries here halve it once more,
/// which brute-force pairwise summation on small instances rules out.
pub fn errata_ledger() -> &'static [ErrataEntry] {
    &ERRATA
}

/// Closed-form measure values for one family instance, with exact arithmetic.
///
/// There is no closed form for λ₁ (and hence none for CS); the report carries
/// the exact mean degree instead so `CS = λ₁ − mean_degree` once a λ₁ is
/// supplied.
#[derive(Debug, Clone, PartialEq)]
pub struct FormulaReport {
    pub spec: FamilySpec,
    pub irr: u64,
    pub irr_t: u64,
    pub variance: Rational,
    pub mean_degree: Rational,
    /// Parameter range the forms are valid on.
    pub validity: &'static str,
    /// Errata applying to this family; empty when every printed form matches
    /// the recomputation.
    pub errata: Vec<&'static ErrataEntry>,
}

impl FormulaReport {
    /// `λ₁ − 2m/n` with the exact closed-form mean.
    pub fn cs_given_lambda1(&self, lambda1: f64) -> f64 {
        lambda1 - crate::rational_to_f64(self.mean_degree)
    }
}

/// Evaluates the closed forms (errata corrections applied) for a valid spec.
pub fn closed_form(spec: &FamilySpec) -> Result<FormulaReport, GenerateError> {
    spec.validate()?;
    let report = match *spec {
        FamilySpec::Tuc4c8s { p, q } => {
            let qi = q as i128;
            FormulaReport {
                spec: *spec,
                irr: 4 * p as u64,
                irr_t: 16 * (p as u64).pow(2) * (q as u64 - 1),
                variance: Rational::new(qi - 1, qi * qi),
                mean_degree: Rational::new(3 * qi - 1, qi),
                validity: "p >= 2, q >= 2",
                errata: vec![&ERRATA[0], &ERRATA[3]],
            }
        }
        FamilySpec::Tuc4c8r { p, q } => {
            let qi = q as i128;
            FormulaReport {
                spec: *spec,
                irr: 4 * p as u64,
                irr_t: 4 * (p as u64).pow(2) * (2 * q as u64 - 1),
                variance: Rational::new(2 * qi - 1, 4 * qi * qi),
                mean_degree: Rational::new(6 * qi - 1, 2 * qi),
                validity: "p >= 2, q >= 2",
                errata: vec![&ERRATA[1], &ERRATA[4]],
            }
        }
        FamilySpec::Tuc4 { p, q } => {
            let pi = p as i128;
            FormulaReport {
                spec: *spec,
                irr: 2 * q as u64,
                irr_t: 2 * (q as u64).pow(2) * (p as u64 - 2),
                variance: Rational::new(2 * (pi - 2), pi * pi),
                mean_degree: Rational::new(2 * (2 * pi - 1), pi),
                validity: "p >= 3, q >= 3",
                errata: vec![&ERRATA[5]],
            }
        }
        FamilySpec::Tuhc6 { p, q } => {
            let qi = q as i128;
            FormulaReport {
                spec: *spec,
                irr: 4 * p as u64,
                irr_t: 4 * (p as u64).pow(2) * (q as u64 - 1),
                variance: Rational::new(qi - 1, qi * qi),
                mean_degree: Rational::new(3 * qi - 1, qi),
                validity: "p >= 2, q >= 2",
                errata: vec![],
            }
        }
        FamilySpec::Tuvc6 { p, q } => {
            let qi = q as i128;
            FormulaReport {
                spec: *spec,
                irr: 4 * p as u64,
                irr_t: 8 * (p as u64).pow(2) * (q as u64 - 2),
                variance: Rational::new(2 * (qi - 2), qi * qi),
                mean_degree: Rational::new(3 * qi - 2, qi),
                validity: "p >= 2, q >= 3",
                errata: vec![&ERRATA[6]],
            }
        }
        FamilySpec::Dendrimer { k, d } => {
            let ki = k as i128;
            let pow_d = (ki - 1).pow(d);
            let pow_d1 = (ki - 1).pow(d - 1);
            let n = (ki * pow_d - 2) / (ki - 2);
            let m = ki * (pow_d - 1) / (ki - 2);
            // |V1|·|V2|·(k−1), both factors integral
            let irr_t = ki * pow_d * (ki * pow_d1 - 2) / (ki - 2);
            FormulaReport {
                spec: *spec,
                irr: u64::try_from(ki * pow_d).expect("irr fits u64"),
                irr_t: u64::try_from(irr_t).expect("irr_t fits u64"),
                variance: Rational::new(
                    ki * (ki - 2) * pow_d * (ki * (pow_d - 2) + 2),
                    (ki * pow_d - 2).pow(2),
                ),
                mean_degree: Rational::new(2 * m, n),
                validity: "k >= 3, d >= 1",
                errata: vec![&ERRATA[2]],
            }
        }
        FamilySpec::Circumcoronene { k } => {
            let ki = k as i128;
            FormulaReport {
                spec: *spec,
                irr: 12 * (k as u64 - 1),
                irr_t: 36 * (k as u64).pow(2) * (k as u64 - 1),
                variance: Rational::new(ki - 1, ki * ki),
                mean_degree: Rational::new(3 * ki - 1, ki),
                validity: "k >= 1",
                errata: vec![],
            }
        }
        FamilySpec::MycielskiCycle { n } => {
            let ni = n as i128;
            FormulaReport {
                spec: *spec,
                irr: n as u64 * (n as u64 - 1),
                irr_t: n as u64 * (3 * n as u64 - 7),
                variance: Rational::new(ni * (2 * ni * ni - 13 * ni + 25), (2 * ni + 1).pow(2)),
                mean_degree: Rational::new(8 * ni, 2 * ni + 1),
                validity: "n >= 4",
                errata: vec![],
            }
        }
        FamilySpec::MycielskiPath { n } => {
            let ni = n as i128;
            FormulaReport {
                spec: *spec,
                irr: (n as u64).pow(2) - n as u64 + 6,
                irr_t: (n as u64 - 2) * (3 * n as u64 + 7),
                variance: Rational::new(
                    (ni - 2) * (2 * ni * ni - 9 * ni + 35),
                    (2 * ni + 1).pow(2),
                ),
                mean_degree: Rational::new(2 * (4 * ni - 3), 2 * ni + 1),
                validity: "n >= 4",
                errata: vec![],
            }
        }
    };
    Ok(report)
}

/// Evaluates the uncorrected printed `irr_t` form where one exists
/// (`None` for families whose printed form already matches recomputation).
/// The dendrimer form can be negative or fractional, hence the rational.
pub fn printed_total_irr(spec: &FamilySpec) -> Option<Rational> {
    let int = |v: i128| Rational::new(v, 1);
    match *spec {
        FamilySpec::Tuc4c8s { p, q } => {
            Some(int(8 * (p as i128).pow(2) * (q as i128 - 1)))
        }
        FamilySpec::Tuc4c8r { p, q } => {
            Some(int(2 * (p as i128).pow(2) * (2 * q as i128 - 1)))
        }
        FamilySpec::Tuc4 { p, q } => Some(int((q as i128).pow(2) * (p as i128 - 2))),
        FamilySpec::Tuvc6 { p, q } => {
            Some(int(4 * (p as i128).pow(2) * (q as i128 - 2)))
        }
        FamilySpec::Dendrimer { k, d } => {
            let ki = k as i128;
            Some(Rational::new(
                ki * ki * (ki - 1).pow(d) * ((ki - 1).pow(d - 1) - 2),
                2 * (ki - 2),
            ))
        }
        _ => None,
    }
}

/// The constant the uncorrected TUC4C8 CS forms subtract from λ₁
/// (`3 + 1/q` for the S variant, `3 + 1/(2q)` for R). `None` for families
/// with no CS erratum.
pub fn printed_cs_offset(family: Family, q: u32) -> Option<Rational> {
    let qi = q as i128;
    match family {
        Family::Tuc4c8s => Some(Rational::new(3 * qi + 1, qi)),
        Family::Tuc4c8r => Some(Rational::new(6 * qi + 1, 2 * qi)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ledger_covers_the_known_discrepancies() {
        let ledger = errata_ledger();
        assert_eq!(ledger.len(), 7);
        assert_eq!(ledger.iter().filter(|e| e.field == "cs").count(), 2);
        assert_eq!(ledger.iter().filter(|e| e.field == "irr_t").count(), 5);
    }

    #[test]
    fn tuc4c8s_4_4_closed_forms() {
        let spec = FamilySpec::Tuc4c8s { p: 4, q: 4 };
        let r = closed_form(&spec).unwrap();
        assert_eq!(r.irr, 16);
        assert_eq!(r.irr_t, 768); // printed form halves this to 384
        assert_eq!(printed_total_irr(&spec), Some(Rational::new(384, 1)));
        assert_eq!(r.variance, Rational::new(3, 16));
        assert_eq!(r.mean_degree, Rational::new(11, 4));
        assert_eq!(r.errata.len(), 2);
    }

    #[test]
    fn tuvc6_4_9_printed_form_halves_the_pairwise_sum() {
        let spec = FamilySpec::Tuvc6 { p: 4, q: 9 };
        let r = closed_form(&spec).unwrap();
        assert_eq!(r.irr_t, 896); // |V1|·|V2| = 16·56
        assert_eq!(printed_total_irr(&spec), Some(Rational::new(448, 1)));
    }

    #[test]
    fn mycielski_path_8_closed_forms() {
        let r = closed_form(&FamilySpec::MycielskiPath { n: 8 }).unwrap();
        assert_eq!(r.irr, 62);
        assert_eq!(r.irr_t, 186);
        assert_eq!(r.variance, Rational::new(546, 289));
    }

    #[test]
    fn mycielski_cycle_8_closed_forms() {
        let r = closed_form(&FamilySpec::MycielskiCycle { n: 8 }).unwrap();
        assert_eq!(r.irr, 56);
        assert_eq!(r.irr_t, 136);
        assert_eq!(r.variance, Rational::new(392, 289));
    }

    #[test]
    fn dendrimer_3_2_corrected_total_irregularity() {
        let r = closed_form(&FamilySpec::Dendrimer { k: 3, d: 2 }).unwrap();
        assert_eq!(r.irr, 12);
        assert_eq!(r.irr_t, 48);
        assert_eq!(r.errata[0].field, "irr_t");
        // the printed form collapses to zero here
        assert_eq!(printed_total_irr(&FamilySpec::Dendrimer { k: 3, d: 2 }), Some(Rational::new(0, 1)));
    }

    #[test]
    fn dendrimer_printed_form_is_negative_on_the_star() {
        assert_eq!(printed_total_irr(&FamilySpec::Dendrimer { k: 3, d: 1 }), Some(Rational::new(-9, 1)));
        assert_eq!(printed_total_irr(&FamilySpec::Circumcoronene { k: 3 }), None);
    }

    #[test]
    fn circumcoronene_5_closed_forms() {
        let r = closed_form(&FamilySpec::Circumcoronene { k: 5 }).unwrap();
        assert_eq!(r.irr, 48);
        assert_eq!(r.irr_t, 3600);
        assert_eq!(r.variance, Rational::new(4, 25));
        assert!(r.errata.is_empty());
    }

    #[test]
    fn circumcoronene_2_variance_is_quarter() {
        let r = closed_form(&FamilySpec::Circumcoronene { k: 2 }).unwrap();
        assert_eq!(r.variance, Rational::new(1, 4));
    }

    #[test]
    fn printed_cs_offsets() {
        assert_eq!(printed_cs_offset(Family::Tuc4c8s, 4), Some(Rational::new(13, 4)));
        assert_eq!(printed_cs_offset(Family::Tuc4c8r, 4), Some(Rational::new(25, 8)));
        assert_eq!(printed_cs_offset(Family::Tuhc6, 4), None);
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(closed_form(&FamilySpec::Tuc4 { p: 2, q: 5 }).is_err());
    }

    #[test]
    fn closed_forms_nonnegative_on_validity_floors() {
        let floor_specs = [
            FamilySpec::Tuc4c8s { p: 2, q: 2 },
            FamilySpec::Tuc4c8r { p: 2, q: 2 },
            FamilySpec::Tuc4 { p: 3, q: 3 },
            FamilySpec::Tuhc6 { p: 2, q: 2 },
            FamilySpec::Tuvc6 { p: 2, q: 3 },
            FamilySpec::Dendrimer { k: 3, d: 1 },
            FamilySpec::Circumcoronene { k: 1 },
            FamilySpec::MycielskiCycle { n: 4 },
            FamilySpec::MycielskiPath { n: 4 },
        ];
        for s in floor_specs {
            let r = closed_form(&s).unwrap();
            assert!(r.variance >= Rational::new(0, 1), "{s}");
            assert!(r.mean_degree > Rational::new(0, 1), "{s}");
        }
    }
}
