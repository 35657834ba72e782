"""Business logic services package: reports, empirical suites and example reproduction."""
