fn main() {
    println!("origami");
}
