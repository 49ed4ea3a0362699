#ifndef GROUPENT_VERSION_HPP
#define GROUPENT_VERSION_HPP

#define GROUPENT_VERSION "0.1.0"

#endif
