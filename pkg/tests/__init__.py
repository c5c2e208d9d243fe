# Tests package for starcat
