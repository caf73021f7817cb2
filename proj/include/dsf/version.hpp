#ifndef DSF_VERSION_HPP
#define DSF_VERSION_HPP

namespace dsf {

inline constexpr const char* kVersion = "0.1.0";

} // namespace dsf

#endif // DSF_VERSION_HPP
