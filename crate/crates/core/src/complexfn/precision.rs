use super::real::Real;
use crate::{Error, Result};

/// Working-precision settings passed explicitly to the series evaluators.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrecisionConfig {
    pub working_digits: u32,
    /// Hard cap on the number of series terms.
    pub series_truncation_bound: usize,
    /// Series stop once three consecutive terms fall below
    /// `tolerance_abs · |partial sum|`.
    pub tolerance_abs: f64,
    /// Relative tolerance for identity checks at this precision.
    pub tolerance_rel: f64,
}

impl PrecisionConfig {
    pub fn double() -> Self {
        PrecisionConfig {
            working_digits: 15,
            series_truncation_bound: 2000,
            tolerance_abs: 1e-17,
            tolerance_rel: 1e-13,
        }
    }

    pub fn extended() -> Self {
        PrecisionConfig {
            working_digits: 31,
            series_truncation_bound: 4000,
            tolerance_abs: 1e-33,
            tolerance_rel: 1e-28,
        }
    }

    /// Default settings for the given working type.
    pub fn for_real<R: Real>() -> Self {
        if R::is_extended() {
            Self::extended()
        } else {
            Self::double()
        }
    }

    /// Double precision up to 15 digits, double-double up to 31.
    pub fn from_digits(digits: u32) -> Result<Self> {
        match digits {
            0 => Err(Error::InvalidArgument("working digits must be positive".into())),
            1..=15 => Ok(PrecisionConfig {
                working_digits: digits,
                ..Self::double()
            }),
            16..=31 => Ok(PrecisionConfig {
                working_digits: digits,
                ..Self::extended()
            }),
            _ => Err(Error::InvalidArgument(format!(
                "at most 31 significant digits are supported, got {digits}"
            ))),
        }
    }

    pub fn is_extended(&self) -> bool {
        self.working_digits > 15
    }

    pub fn validate<R: Real>(&self) -> Result<()> {
        if self.working_digits == 0 || self.series_truncation_bound == 0 {
            return Err(Error::InvalidArgument("precision fields must be positive".into()));
        }
        if [self.tolerance_abs, self.tolerance_rel]
            .iter()
            .any(|t| t.is_nan() || *t <= 0.0)
        {
            return Err(Error::InvalidArgument("tolerances must be positive".into()));
        }
        if self.tolerance_rel < R::epsilon().to_f64() {
            return Err(Error::InvalidArgument(format!(
                "tolerance_rel {} is below the unit roundoff of the working type",
                self.tolerance_rel
            )));
        }
        Ok(())
    }
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        Self::double()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Dd;

    #[test]
    fn defaults_validate() {
        PrecisionConfig::double().validate::<f64>().unwrap();
        PrecisionConfig::extended().validate::<Dd>().unwrap();
        assert!(PrecisionConfig::extended().validate::<f64>().is_err());
    }

    #[test]
    fn digits_select_mode() {
        assert!(!PrecisionConfig::from_digits(15).unwrap().is_extended());
        assert!(PrecisionConfig::from_digits(30).unwrap().is_extended());
        assert!(PrecisionConfig::from_digits(40).is_err());
        assert!(PrecisionConfig::from_digits(0).is_err());
    }
}
