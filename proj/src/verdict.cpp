// verdict.cpp — placeholder, implemented in a later commit.
namespace braidcx {}
