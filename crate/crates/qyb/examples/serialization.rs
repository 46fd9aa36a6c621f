//! Canonical text and JSON forms of scalars and operators.

use qyb::ring::ScalarFrac;
use qyb::rmatrix::RData;
use qyb::tensor::TensorOp;

fn main() {
    println!("{}", RData::lambda());
    let id = TensorOp::identity(2, 1);
    println!("{}", serde_json::to_string(&id.to_json()).unwrap());
    let s = ScalarFrac::parse("(q^3 - q^-3)/(q - q^-1)").unwrap();
    println!("{s}");
    let back = TensorOp::from_json(&id.scale(&s).to_json()).unwrap();
    println!("round trip: {}", back == id.scale(&s));
}
