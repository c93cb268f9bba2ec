use serde::Serialize;
use serde_json::Value;

/// A certificate outcome: `{check, params, pass, max_deviation, details[]}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertReport {
    pub check: String,
    pub params: Value,
    pub pass: bool,
    pub max_deviation: f64,
    pub details: Vec<Value>,
}

impl CertReport {
    pub fn new(check: impl Into<String>, params: Value) -> Self {
        CertReport {
            check: check.into(),
            params,
            pass: true,
            max_deviation: 0.0,
            details: Vec::new(),
        }
    }

    /// Records one deviation against its tolerance.
    pub fn record(&mut self, deviation: f64, tolerance: f64, detail: Value) {
        let ok = deviation <= tolerance;
        self.pass &= ok;
        if deviation.is_nan() {
            self.max_deviation = f64::NAN;
        } else if !self.max_deviation.is_nan() {
            self.max_deviation = self.max_deviation.max(deviation);
        }
        self.details.push(detail);
    }

    /// Records an exact pass/fail outcome with zero deviation on success.
    pub fn record_exact(&mut self, ok: bool, detail: Value) {
        self.record(if ok { 0.0 } else { f64::INFINITY }, 0.0, detail);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn aggregation() {
        let mut r = CertReport::new("demo", json!({"m": 3}));
        r.record(1e-12, 1e-9, json!({"k": 0}));
        assert!(r.pass);
        r.record(1e-3, 1e-9, json!({"k": 1}));
        assert!(!r.pass);
        assert_eq!(r.max_deviation, 1e-3);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["check"], "demo");
        assert_eq!(v["details"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn nan_fails_and_sticks() {
        let mut r = CertReport::new("nan", Value::Null);
        r.record(f64::NAN, 1.0, Value::Null);
        r.record(0.5, 1.0, Value::Null);
        assert!(!r.pass);
        assert!(r.max_deviation.is_nan());
    }
}
