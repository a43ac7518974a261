pub fn run() { unimplemented!() }
