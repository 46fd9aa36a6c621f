//! JSON form: `{"N":…, "sites":…, "entries":[[row, col, "scalar"], …]}`.

use serde_json::{json, Value};

use crate::ring::ScalarFrac;

use super::{TensorError, TensorOp};

impl TensorOp {
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries()
            .map(|(r, c, v)| json!([r, c, v.to_string()]))
            .collect();
        json!({ "N": self.local_dim(), "sites": self.sites(), "entries": entries })
    }

    pub fn from_json(v: &Value) -> Result<TensorOp, TensorError> {
        let bad = |m: &str| TensorError::Malformed(m.to_string());
        let n = v["N"].as_u64().ok_or_else(|| bad("N"))? as usize;
        let sites = v["sites"].as_u64().ok_or_else(|| bad("sites"))? as usize;
        let dim = n.pow(sites as u32);
        let mut items = Vec::new();
        for e in v["entries"].as_array().ok_or_else(|| bad("entries"))? {
            let r = e[0].as_u64().ok_or_else(|| bad("row"))? as usize;
            let c = e[1].as_u64().ok_or_else(|| bad("col"))? as usize;
            let s = e[2].as_str().ok_or_else(|| bad("value"))?;
            if r >= dim || c >= dim {
                return Err(bad("index out of range"));
            }
            items.push((r, c, ScalarFrac::parse(s)?));
        }
        Ok(TensorOp::from_entries(n, sites, items))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let p = TensorOp::permutation(2).scale(&ScalarFrac::parse("q/(q^2 + 1)").unwrap());
        let j = p.to_json();
        assert_eq!(j["entries"][0], json!([0, 0, "(q)/(q^2 + 1)"]));
        assert_eq!(TensorOp::from_json(&j).unwrap(), p);
    }
}
