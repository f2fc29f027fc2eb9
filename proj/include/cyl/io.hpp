#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cyl/core.hpp"
#include "cyl/slices.hpp"

namespace cyl {

struct ParseError : Error { using Error::Error; };

std::string join_ints(const std::vector<int>& v, std::string_view sep = ",");
// "1,2,0", "(1,2,0)" or "c=(1,2,0)"; empty input gives an empty list
std::vector<int> parse_int_list(std::string_view text);

std::string to_string(const Profile& c);      // (1,2,0)
std::string to_string(const Shape& s);        // (2,1)
std::string to_string(const Partition& p);    // 5,4,1
std::string to_text(const CylindricPartition& L);  // c=(1,2,0) 10,5,4,1|12,8,5,3|7,6,4,2
std::string to_text(const Slice& s);          // c=(1,1,1) [2,2,3]

Profile parse_profile(std::string_view text);
Shape parse_shape(std::string_view text);
Partition parse_partition(std::string_view text);
// rows separated by '|'
CylindricPartition parse_rows(std::string_view text, const Profile& c);
// full canonical form with the c=(...) prefix
CylindricPartition parse_cylindric(std::string_view text);
Slice parse_slice(std::string_view text, const Profile& c);

std::string trim(std::string_view s);

}  // namespace cyl
