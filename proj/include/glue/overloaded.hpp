#ifndef GLUE_OVERLOADED_HPP
#define GLUE_OVERLOADED_HPP

namespace glue {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace glue

#endif  // GLUE_OVERLOADED_HPP
