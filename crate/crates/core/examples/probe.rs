fn main() {
    println!("eig sum = {}", osn_core::atomic::smoke_eig());
}
