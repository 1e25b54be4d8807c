//! The fixed matrix computations, printed as a report.

fn main() {
    let r = gkcut::lab::explicit_computations();
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
}
