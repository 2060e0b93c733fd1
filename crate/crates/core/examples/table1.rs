fn main() {
    print!("{}", poset_morse::report::table1());
}
