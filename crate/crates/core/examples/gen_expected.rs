fn main() {
    let v = catbraid::corpus::compute_expected().unwrap();
    println!("{}", serde_json::to_string_pretty(&v).unwrap());
}
