fn main() { transvergent::cli::run(); }
