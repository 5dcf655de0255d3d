#ifndef NEGCHAIN_VERSION_HPP
#define NEGCHAIN_VERSION_HPP

#define NEGCHAIN_VERSION "1.0.0"

#endif
